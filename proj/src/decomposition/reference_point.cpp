#include <algorithm>
#include <limits>

#include "moead/decomposition.hpp"

namespace moead {

ReferencePointState::ReferencePointState(std::size_t num_objectives, double eps_ini_, double eps_end_,
                                         std::size_t max_generation_)
    : z_min(num_objectives, std::numeric_limits<double>::infinity()),
      eps_ini(eps_ini_),
      eps_end(eps_end_),
      max_generation(max_generation_),
      generation(1) {
    if (max_generation == 0) throw ContractError("ReferencePointState: T must be at least 1");
}

void ReferencePointState::observe(std::span<const double> f) {
    if (f.size() != z_min.size()) throw ContractError("ReferencePointState::observe: length mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) z_min[i] = std::min(z_min[i], f[i]);
}

ObjectiveVector epsilon_schedule(const ReferencePointState& state) {
    const std::size_t t = state.generation;
    const std::size_t big_t = state.max_generation;
    if (t < 1 || t > big_t) throw ContractError("epsilon_schedule: generation outside [1, T]");
    double eps = state.eps_end;
    if (big_t > 1) {
        // Same line as (ini - end)(T - t)/(T - 1) + end, written so both endpoints are exact.
        const double span = static_cast<double>(big_t - 1);
        eps = state.eps_ini * (static_cast<double>(big_t - t) / span) +
              state.eps_end * (static_cast<double>(t - 1) / span);
    }
    return ObjectiveVector(state.z_min.size(), eps);
}

ObjectiveVector reference_point(const ReferencePointState& state) {
    const auto eps = epsilon_schedule(state);
    ObjectiveVector z(state.z_min.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = state.z_min[i] - eps[i];
    return z;
}

ObjectiveVector population_nadir(std::span<const Solution> population) {
    if (population.empty()) throw ContractError("population_nadir: empty population");
    ObjectiveVector z = population.front().objectives;
    for (const auto& s : population.subspan(1)) {
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::max(z[i], s.objectives[i]);
    }
    return z;
}

void normalize_into(std::span<const double> f, std::span<const double> z_star, std::span<const double> z_nad,
                    double eps_norm, std::span<double> out) {
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = (f[i] - z_star[i]) / (z_nad[i] - z_star[i] + eps_norm);
}

ObjectiveVector normalize(std::span<const double> f, std::span<const double> z_star, std::span<const double> z_nad,
                          double eps_norm) {
    if (f.size() != z_star.size() || f.size() != z_nad.size()) throw ContractError("normalize: length mismatch");
    ObjectiveVector out(f.size());
    normalize_into(f, z_star, z_nad, eps_norm, out);
    return out;
}

}  // namespace moead
