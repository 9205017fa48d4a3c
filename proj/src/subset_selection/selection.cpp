#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "moead/kernels.hpp"
#include "moead/subset_selection.hpp"

namespace moead {

namespace {

void require_k(std::size_t k) {
    if (k == 0) throw ContractError("subset selection: k must be positive");
}

void require_uniform(const std::vector<ObjectiveVector>& pts, const char* who) {
    if (pts.empty()) throw ContractError(std::string(who) + ": no candidates");
    for (const auto& p : pts) {
        if (p.size() != pts.front().size()) throw ContractError(std::string(who) + ": ragged candidate set");
    }
}

// Max-heap entry: larger value first, then lower index.
struct Entry {
    double value;
    std::size_t index;
    std::size_t stamp;  // selection size when `value` was computed
};

struct EntryOrder {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.value != b.value) return a.value < b.value;
        return a.index > b.index;
    }
};

using Heap = std::priority_queue<Entry, std::vector<Entry>, EntryOrder>;

}  // namespace

std::string_view selection_name(SelectionMethod method) {
    switch (method) {
        case SelectionMethod::distance: return "distance";
        case SelectionMethod::greedy_hv: return "greedy_hv";
        case SelectionMethod::greedy_igd: return "greedy_igd";
    }
    return "?";
}

SelectionMethod parse_selection(std::string_view name) {
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    std::replace(n.begin(), n.end(), '-', '_');
    for (auto m : {SelectionMethod::distance, SelectionMethod::greedy_hv, SelectionMethod::greedy_igd}) {
        if (selection_name(m) == n) return m;
    }
    throw ContractError("unknown selection method: " + std::string(name));
}

std::vector<std::size_t> distance_based_select(const std::vector<ObjectiveVector>& candidates, std::size_t k,
                                               RandomSource& rng) {
    require_k(k);
    require_uniform(candidates, "distance_based_select");
    const std::size_t n = candidates.size();
    const std::size_t m_obj = candidates.front().size();

    std::vector<std::size_t> extremes(m_obj, 0);
    for (std::size_t m = 0; m < m_obj; ++m) {
        for (std::size_t i = 1; i < n; ++i) {
            if (candidates[i][m] < candidates[extremes[m]][m]) extremes[m] = i;
        }
    }
    const std::size_t first = extremes[rng.index(m_obj)];

    const kernels::SoaPoints pts(candidates);
    const auto& kern = kernels::active();
    std::vector<double> min_sq(n, std::numeric_limits<double>::infinity());
    std::vector<char> taken(n, 0);
    std::vector<std::size_t> selected{first};
    taken[first] = 1;
    kern.min_sq_dist_update(candidates[first].data(), pts.view(), min_sq.data());

    const std::size_t target = std::min(k, n);
    while (selected.size() < target) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (taken[i]) continue;
            if (best == n || min_sq[i] > min_sq[best]) best = i;
        }
        selected.push_back(best);
        taken[best] = 1;
        kern.min_sq_dist_update(candidates[best].data(), pts.view(), min_sq.data());
    }
    return selected;
}

std::vector<std::size_t> greedy_hv_select(const std::vector<ObjectiveVector>& normalized, std::size_t k, double r) {
    return greedy_hv_select(normalized, k, r, nullptr);
}

std::vector<std::size_t> greedy_hv_select(const std::vector<ObjectiveVector>& normalized, std::size_t k, double r,
                                          std::vector<double>* gains) {
    require_k(k);
    require_uniform(normalized, "greedy_hv_select");
    const std::size_t n = normalized.size();
    std::vector<ObjectiveVector> chosen;
    chosen.reserve(std::min(k, n));

    Heap heap;
    for (std::size_t i = 0; i < n; ++i) heap.push({hv_contribution(normalized[i], chosen, r), i, 0});

    // Accepting refreshes nothing else: cached values stay valid upper bounds.
    std::vector<std::size_t> selected;
    while (selected.size() < std::min(k, n)) {
        Entry top = heap.top();
        heap.pop();
        if (top.stamp == selected.size()) {
            selected.push_back(top.index);
            chosen.push_back(normalized[top.index]);
            if (gains) gains->push_back(top.value);
            continue;
        }
        top.value = hv_contribution(normalized[top.index], chosen, r);
        top.stamp = selected.size();
        heap.push(top);
    }
    return selected;
}

std::vector<std::size_t> greedy_igd_select(const std::vector<ObjectiveVector>& normalized, std::size_t k,
                                           const std::vector<ObjectiveVector>& reference) {
    require_k(k);
    require_uniform(normalized, "greedy_igd_select");
    if (reference.empty()) throw ContractError("greedy_igd_select: empty reference set");
    if (reference.front().size() != normalized.front().size()) {
        throw ContractError("greedy_igd_select: candidate and reference dimensions differ");
    }
    const std::size_t n = normalized.size();
    const kernels::SoaPoints ref(reference);
    const auto& kern = kernels::active();
    std::vector<double> cur_sq(reference.size(), std::numeric_limits<double>::infinity());
    std::vector<double> cur(reference.size(), std::numeric_limits<double>::infinity());

    // With nothing selected every distance counts in full, so the first pick
    // minimizes the summed distance rather than maximizing an improvement.
    std::size_t first = 0;
    double first_sum = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double s = kern.sum_min_dist(normalized[i].data(), ref.view(), cur.data());
        if (s < first_sum) {
            first_sum = s;
            first = i;
        }
    }
    std::vector<std::size_t> selected{first};
    auto absorb = [&](std::size_t idx) {
        kern.min_sq_dist_update(normalized[idx].data(), ref.view(), cur_sq.data());
        for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = std::sqrt(cur_sq[j]);
    };
    absorb(first);

    const std::size_t target = std::min(k, n);
    Heap heap;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != first) heap.push({kern.sum_improvement(normalized[i].data(), ref.view(), cur.data()), i, 1});
    }
    while (selected.size() < target) {
        Entry top = heap.top();
        heap.pop();
        if (top.stamp == selected.size()) {
            selected.push_back(top.index);
            absorb(top.index);
            continue;
        }
        top.value = kern.sum_improvement(normalized[top.index].data(), ref.view(), cur.data());
        top.stamp = selected.size();
        heap.push(top);
    }
    return selected;
}

std::vector<std::size_t> select_subset(SelectionMethod method, const std::vector<ObjectiveVector>& candidates,
                                       std::size_t k, const HvFrame& frame,
                                       const std::vector<ObjectiveVector>* reference, RandomSource& rng) {
    switch (method) {
        case SelectionMethod::distance: return distance_based_select(candidates, k, rng);
        case SelectionMethod::greedy_hv:
            return greedy_hv_select(normalize_for_indicator(candidates, frame), k, frame.r);
        case SelectionMethod::greedy_igd:
            if (!reference) throw ContractError("greedy_igd selection needs a reference set");
            return greedy_igd_select(normalize_for_indicator(candidates, frame), k,
                                     normalize_for_indicator(*reference, frame));
    }
    return {};
}

std::vector<std::size_t> nondominated_archive_indices(const Archive& archive) {
    return nondominated_filter(archive.objectives());
}

}  // namespace moead
