#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "moead/operators.hpp"

namespace moead {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

void check_bounds_arity(std::span<const double> x, Bounds b) {
    if (x.size() != b.lower.size() || x.size() != b.upper.size()) {
        throw ContractError("variation: decision vector and bounds differ in length");
    }
}

}  // namespace

std::string_view crossover_name(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::sbx: return "SBX";
        case CrossoverKind::wax: return "WAX";
        case CrossoverKind::lax: return "LAX";
    }
    return "?";
}

std::string_view mutation_name(MutationKind kind) {
    switch (kind) {
        case MutationKind::polynomial: return "Polynomial";
        case MutationKind::gaussian: return "Gaussian";
        case MutationKind::random: return "Random";
    }
    return "?";
}

CrossoverKind parse_crossover(std::string_view name) {
    const auto n = lowercase(name);
    for (auto k : {CrossoverKind::sbx, CrossoverKind::wax, CrossoverKind::lax}) {
        if (lowercase(crossover_name(k)) == n) return k;
    }
    throw ContractError("unknown crossover: " + std::string(name));
}

MutationKind parse_mutation(std::string_view name) {
    const auto n = lowercase(name);
    for (auto k : {MutationKind::polynomial, MutationKind::gaussian, MutationKind::random}) {
        if (lowercase(mutation_name(k)) == n) return k;
    }
    throw ContractError("unknown mutation: " + std::string(name));
}

void VariationConfig::validate() const {
    if (!(p_c >= 0.0 && p_c <= 1.0)) throw ContractError("p_c must lie in [0, 1]");
    if (p_m && !(*p_m >= 0.0 && *p_m <= 1.0)) throw ContractError("p_m must lie in [0, 1]");
    if (!(eta_c > 0.0) || !(eta_m > 0.0)) throw ContractError("distribution indices must be positive");
    if (!(sigma_frac > 0.0)) throw ContractError("sigma_frac must be positive");
}

namespace variation {

double sbx_beta(double u, double eta) {
    const double e = 1.0 / (eta + 1.0);
    return u <= 0.5 ? std::pow(2.0 * u, e) : std::pow(2.0 - 2.0 * u, -e);
}

double sbx_child(double p1, double p2, double beta) { return 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2); }

double polynomial_mutation(double y, double lo, double hi, double u, double eta) {
    const double range = hi - lo;
    const double mut_pow = 1.0 / (eta + 1.0);
    double delta_q;
    if (u < 0.5) {
        const double xy = 1.0 - (y - lo) / range;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
        delta_q = std::pow(val, mut_pow) - 1.0;
    } else {
        const double xy = 1.0 - (hi - y) / range;
        const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
        delta_q = 1.0 - std::pow(val, mut_pow);
    }
    return std::clamp(y + delta_q * range, lo, hi);
}

double arithmetic_blend(double a, double b, double alpha) { return alpha * a + (1.0 - alpha) * b; }

}  // namespace variation

DecisionVector crossover(const VariationConfig& cfg, std::span<const double> parent1, std::span<const double> parent2,
                         Bounds bounds, RandomSource& rng) {
    check_bounds_arity(parent1, bounds);
    if (parent2.size() != parent1.size()) throw ContractError("crossover: parents differ in length");
    DecisionVector child(parent1.begin(), parent1.end());
    if (!rng.bernoulli(cfg.p_c)) return child;

    const std::size_t d = child.size();
    switch (cfg.crossover) {
        case CrossoverKind::sbx:
            for (std::size_t i = 0; i < d; ++i) {
                double beta = variation::sbx_beta(rng.uniform(), cfg.eta_c);
                if (rng.bernoulli(0.5)) beta = -beta;
                if (rng.bernoulli(0.5)) beta = 1.0;
                child[i] = variation::sbx_child(parent1[i], parent2[i], beta);
            }
            break;
        case CrossoverKind::wax: {
            const double alpha = rng.uniform();
            for (std::size_t i = 0; i < d; ++i) child[i] = variation::arithmetic_blend(parent1[i], parent2[i], alpha);
            break;
        }
        case CrossoverKind::lax:
            for (std::size_t i = 0; i < d; ++i) {
                child[i] = variation::arithmetic_blend(parent1[i], parent2[i], rng.uniform());
            }
            break;
    }
    for (std::size_t i = 0; i < d; ++i) child[i] = std::clamp(child[i], bounds.lower[i], bounds.upper[i]);
    return child;
}

void mutate(const VariationConfig& cfg, DecisionVector& x, Bounds bounds, RandomSource& rng) {
    check_bounds_arity(x, bounds);
    const double rate = cfg.mutation_rate(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!rng.bernoulli(rate)) continue;
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        switch (cfg.mutation) {
            case MutationKind::polynomial:
                x[i] = variation::polynomial_mutation(x[i], lo, hi, rng.uniform(), cfg.eta_m);
                break;
            case MutationKind::gaussian:
                x[i] = std::clamp(x[i] + rng.normal() * cfg.sigma_frac * (hi - lo), lo, hi);
                break;
            case MutationKind::random:
                x[i] = rng.uniform(lo, hi);
                break;
        }
    }
}

DecisionVector vary(const VariationConfig& cfg, std::span<const double> parent1, std::span<const double> parent2,
                    Bounds bounds, RandomSource& rng) {
    DecisionVector child = crossover(cfg, parent1, parent2, bounds, rng);
    mutate(cfg, child, bounds, rng);
    return child;
}

}  // namespace moead
