#include <algorithm>
#include <numeric>

#include "moead/core.hpp"
#include "moead/kernels.hpp"

namespace moead {

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("dominates: objective vectors differ in length");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

std::vector<std::size_t> nondominated_filter(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) return {};
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw ContractError("nondominated_filter: ragged point set");
    }

    // A dominator always precedes its victim in lexicographic order, so each
    // point only needs checking against the survivors seen before it.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    const auto& k = kernels::active();
    kernels::SoaPoints kept(dim, 64);
    std::vector<std::size_t> result;
    for (std::size_t idx : order) {
        if (kept.size() > 0 && k.any_dominates(points[idx].data(), kept.view())) continue;
        kept.push_back(points[idx]);
        result.push_back(idx);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace moead
