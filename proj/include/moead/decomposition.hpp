#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "moead/core.hpp"

namespace moead {

/// Simplex-lattice weight vectors: every composition of H into M parts, divided by H.
struct WeightLattice {
    std::vector<std::vector<double>> vectors;
    std::size_t divisions = 0;

    std::size_t size() const noexcept { return vectors.size(); }
    std::size_t num_objectives() const noexcept { return vectors.empty() ? 0 : vectors.front().size(); }
};

/// C(H+M-1, M-1); throws ContractError on 64-bit overflow.
std::uint64_t lattice_size(std::size_t num_objectives, std::size_t divisions);

/// Vectors in ascending lexicographic order, e.g. M=2, H=2 gives (0,1), (0.5,0.5), (1,0).
WeightLattice das_dennis(std::size_t num_objectives, std::size_t divisions);

/// Divisions H whose lattice has exactly `population` vectors, if any.
std::optional<std::size_t> divisions_for_population(std::size_t num_objectives, std::size_t population);

enum class ScalarizerKind { ws, tch, mtch, pbi, ipbi };

std::string_view scalarizer_name(ScalarizerKind kind);
ScalarizerKind parse_scalarizer(std::string_view name);

/// IPBI is maximized; all other scalarizers are minimized.
constexpr bool is_maximized(ScalarizerKind kind) { return kind == ScalarizerKind::ipbi; }
constexpr bool uses_penalty(ScalarizerKind kind) { return kind == ScalarizerKind::pbi || kind == ScalarizerKind::ipbi; }

struct ScalarizerChoice {
    ScalarizerKind kind = ScalarizerKind::tch;
    std::optional<double> theta;  ///< Present iff kind is PBI or IPBI.

    static ScalarizerChoice make(ScalarizerKind kind, double theta = 5.0);
    bool operator==(const ScalarizerChoice&) const = default;
};

double scalarize_ws(std::span<const double> f, std::span<const double> w);
double scalarize_tch(std::span<const double> f, std::span<const double> w, std::span<const double> z_star);
/// Zero weights are replaced by 1e-6.
double scalarize_mtch(std::span<const double> f, std::span<const double> w, std::span<const double> z_star);
double scalarize_pbi(std::span<const double> f, std::span<const double> w, std::span<const double> z_star,
                     double theta);
/// Maximized. Distances are measured from the nadir estimate z_nad.
double scalarize_ipbi(std::span<const double> f, std::span<const double> w, std::span<const double> z_nad,
                      double theta);

/// Dispatches on the choice; `z_star` anchors WS/TCH/MTCH/PBI, `z_nad` anchors IPBI.
double scalarize(const ScalarizerChoice& choice, std::span<const double> f, std::span<const double> w,
                 std::span<const double> z_star, std::span<const double> z_nad);

/// Strict, orientation-aware improvement test: `candidate` beats `incumbent`.
constexpr bool strictly_better(ScalarizerKind kind, double candidate, double incumbent) {
    return is_maximized(kind) ? candidate > incumbent : candidate < incumbent;
}

/// Dynamic reference point: archive-wide minima shifted by a linearly
/// decreasing epsilon (from eps_ini at generation 1 to eps_end at generation T).
struct ReferencePointState {
    ObjectiveVector z_min;
    double eps_ini = 0.0;
    double eps_end = 0.0;
    std::size_t max_generation = 1;  ///< T
    std::size_t generation = 1;      ///< t, 1-based

    ReferencePointState() = default;
    ReferencePointState(std::size_t num_objectives, double eps_ini, double eps_end, std::size_t max_generation);

    /// Folds one evaluated objective vector into z_min.
    void observe(std::span<const double> f);
};

/// Per-component epsilon at the state's generation (all components share one schedule).
ObjectiveVector epsilon_schedule(const ReferencePointState& state);
/// z_min - epsilon.
ObjectiveVector reference_point(const ReferencePointState& state);

/// Componentwise maximum over a population's objective vectors.
ObjectiveVector population_nadir(std::span<const Solution> population);

/// (f - z_star) / (z_nad - z_star + eps_norm), componentwise.
ObjectiveVector normalize(std::span<const double> f, std::span<const double> z_star, std::span<const double> z_nad,
                          double eps_norm);
void normalize_into(std::span<const double> f, std::span<const double> z_star, std::span<const double> z_nad,
                    double eps_norm, std::span<double> out);

}  // namespace moead
