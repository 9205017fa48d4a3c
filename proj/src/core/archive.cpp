#include <cmath>

#include "moead/core.hpp"

namespace moead {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

void Archive::record(Solution s) { entries_.push_back(std::move(s)); }

std::vector<ObjectiveVector> Archive::objectives() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& s : entries_) out.push_back(s.objectives);
    return out;
}

ObjectiveVector Problem::evaluate(std::span<const double> x) const {
    const std::size_t d = num_variables();
    if (x.size() != d) {
        throw ContractError(name() + ": expected " + std::to_string(d) + " variables, got " +
                            std::to_string(x.size()));
    }
    const auto lo = lower_bounds();
    const auto hi = upper_bounds();
    for (std::size_t i = 0; i < d; ++i) {
        if (!(x[i] >= lo[i] && x[i] <= hi[i])) {
            throw ContractError(name() + ": variable " + std::to_string(i) + " = " + std::to_string(x[i]) +
                                " outside [" + std::to_string(lo[i]) + ", " + std::to_string(hi[i]) + "]");
        }
    }
    ObjectiveVector f(num_objectives());
    evaluate_unchecked(x, f);
    for (double v : f) {
        if (!std::isfinite(v)) throw NumericError(name() + ": non-finite objective value");
    }
    return f;
}

}  // namespace moead
