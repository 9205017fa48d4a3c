#include <cmath>
#include <limits>

#include "moead/indicators.hpp"
#include "moead/kernels.hpp"

namespace moead {

double igd(const std::vector<ObjectiveVector>& points, const std::vector<ObjectiveVector>& reference) {
    if (points.empty()) throw ContractError("igd: empty solution set");
    if (reference.empty()) throw ContractError("igd: empty reference set");
    const std::size_t dim = reference.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw ContractError("igd: solution and reference dimensions differ");
    }
    const kernels::SoaPoints ref(reference);
    std::vector<double> mins(reference.size(), std::numeric_limits<double>::infinity());
    const auto& k = kernels::active();
    for (const auto& p : points) k.min_sq_dist_update(p.data(), ref.view(), mins.data());
    double sum = 0.0;
    for (double s : mins) sum += std::sqrt(s);
    return sum / static_cast<double>(reference.size());
}

double igd_in_frame(const std::vector<ObjectiveVector>& points, const std::vector<ObjectiveVector>& reference,
                    const HvFrame& frame) {
    return igd(normalize_for_indicator(points, frame), normalize_for_indicator(reference, frame));
}

}  // namespace moead
