#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "moead/core.hpp"

namespace moead {

enum class CrossoverKind { sbx, wax, lax };
enum class MutationKind { polynomial, gaussian, random };

std::string_view crossover_name(CrossoverKind kind);
std::string_view mutation_name(MutationKind kind);
CrossoverKind parse_crossover(std::string_view name);
MutationKind parse_mutation(std::string_view name);

struct VariationConfig {
    CrossoverKind crossover = CrossoverKind::sbx;
    double p_c = 1.0;
    MutationKind mutation = MutationKind::polynomial;
    /// Per-variable mutation rate; empty means 1/D.
    std::optional<double> p_m;
    double eta_c = 20.0;
    double eta_m = 20.0;
    /// Gaussian step as a fraction of each variable's range.
    double sigma_frac = 0.1;

    double mutation_rate(std::size_t num_variables) const {
        return p_m.value_or(1.0 / static_cast<double>(num_variables));
    }
    /// Throws ContractError when a field is out of its domain.
    void validate() const;

    bool operator==(const VariationConfig&) const = default;
};

struct Bounds {
    std::span<const double> lower;
    std::span<const double> upper;
};

/// One child. With probability p_c the configured crossover, else a copy of parent1.
DecisionVector crossover(const VariationConfig& cfg, std::span<const double> parent1, std::span<const double> parent2,
                         Bounds bounds, RandomSource& rng);

/// Each variable mutated independently with the configured rate; result clamped.
void mutate(const VariationConfig& cfg, DecisionVector& x, Bounds bounds, RandomSource& rng);

/// crossover() followed by mutate().
DecisionVector vary(const VariationConfig& cfg, std::span<const double> parent1, std::span<const double> parent2,
                    Bounds bounds, RandomSource& rng);

/// Deterministic building blocks, exposed for testing.
namespace variation {

/// SBX spread factor for a uniform draw u in [0,1).
double sbx_beta(double u, double eta);
/// First SBX child for one variable: ((1 + beta) p1 + (1 - beta) p2) / 2.
double sbx_child(double p1, double p2, double beta);
/// Bounded polynomial mutation of y in [lo, hi] for draw u.
double polynomial_mutation(double y, double lo, double hi, double u, double eta);
/// alpha * a + (1 - alpha) * b
double arithmetic_blend(double a, double b, double alpha);

}  // namespace variation

}  // namespace moead
