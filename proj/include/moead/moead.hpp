#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "moead/core.hpp"
#include "moead/decomposition.hpp"
#include "moead/operators.hpp"

namespace moead {

/// Neighborhood size either as a fraction of N (rounded up) or as an absolute count.
struct NeighborhoodSize {
    enum class Kind { fraction, count };

    Kind kind = Kind::fraction;
    double fraction = 0.1;
    std::size_t count = 0;

    static NeighborhoodSize of_fraction(double f) { return {Kind::fraction, f, 0}; }
    static NeighborhoodSize of_count(std::size_t n) { return {Kind::count, 0.0, n}; }

    /// ceil(fraction * N) or count, clipped to [2, N].
    std::size_t resolve(std::size_t population) const;

    bool operator==(const NeighborhoodSize&) const = default;
};

struct MoeadConfig {
    ScalarizerChoice scalarizer = ScalarizerChoice::make(ScalarizerKind::tch);
    double eps_ini = 0.0;
    double eps_end = 0.0;
    NeighborhoodSize mating = NeighborhoodSize::of_count(20);
    NeighborhoodSize replacement = NeighborhoodSize::of_count(20);
    double eps_norm = 1e-6;
    bool normalize = true;
    VariationConfig variation;
    std::size_t population = 91;
    std::size_t budget = 10000;

    /// Throws ContractError when a field is outside its domain.
    void validate() const;

    bool operator==(const MoeadConfig&) const = default;
};

/// Flat `key = value` text; '#' starts a comment. Unknown keys are errors.
MoeadConfig parse_config(std::istream& in);
MoeadConfig load_config(const std::string& path);
/// Inverse of parse_config.
std::string format_config(const MoeadConfig& config);

/// Per subproblem, the nearest weight vectors (self first), ties by lower index.
std::vector<std::vector<std::size_t>> build_neighborhoods(const WeightLattice& lattice, NeighborhoodSize size);

/// Raw-space anchors in effect when a replacement decision was made. The
/// scalarizer saw objectives normalized with (z_min, z_nad, eps_norm) and a
/// normalized reference point of -epsilon, or raw objectives and z_min - epsilon
/// when normalization is off.
struct ReplacementEvent {
    std::size_t generation;
    std::size_t subproblem;
    const Solution& previous;
    const Solution& incoming;
    const std::vector<double>& weight;
    const ObjectiveVector& z_min;
    const ObjectiveVector& z_nad;
    double epsilon;
};

struct RunObserver {
    std::function<void(const ReplacementEvent&)> on_replacement;
};

struct RunResult {
    std::vector<Solution> final_population;
    Archive archive;
    MoeadConfig config;
    std::uint64_t seed = 0;
    std::string problem;
    /// Evolutionary generations after initialization, the clipped last one included.
    std::size_t generations = 0;
};

/// Generations T of the epsilon schedule: floor(budget / N).
std::size_t max_generation(const MoeadConfig& config);

RunResult run_moead(const Problem& problem, const MoeadConfig& config, std::uint64_t seed,
                    const RunObserver* observer = nullptr);

}  // namespace moead
