#include <algorithm>
#include <cmath>
#include <numeric>

#include "moead/experiments.hpp"

namespace moead {

double mean(std::span<const double> v) {
    if (v.empty()) throw ContractError("mean of an empty sample");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) throw ContractError("median of an empty sample");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string_view outcome_mark(Outcome o) {
    switch (o) {
        case Outcome::better: return "+";
        case Outcome::worse: return "-";
        case Outcome::equivalent: return "=";
    }
    return "?";
}

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, Orientation orientation,
                                double alpha) {
    if (a.size() < 2 || b.size() < 2) throw ContractError("wilcoxon_rank_sum: each sample needs at least two values");
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    std::vector<std::pair<double, std::size_t>> pooled;  // value, 0 for a / 1 for b
    pooled.reserve(n);
    for (double v : a) pooled.emplace_back(v, 0);
    for (double v : b) pooled.emplace_back(v, 1);
    std::sort(pooled.begin(), pooled.end());

    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) ++j;
        const double t = static_cast<double>(j - i);
        const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].second == 0) rank_sum_a += mid_rank;
        }
        tie_term += t * t * t - t;
        i = j;
    }

    RankSumResult res;
    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dn = static_cast<double>(n);
    res.u = rank_sum_a - dn1 * (dn1 + 1.0) / 2.0;
    const double mu = dn1 * dn2 / 2.0;
    const double var = dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (!(var > 0.0)) {
        res.p_value = 1.0;
        return res;
    }
    res.z = (std::abs(res.u - mu) - 0.5) / std::sqrt(var);
    res.p_value = std::min(1.0, std::erfc(res.z / std::sqrt(2.0)));
    if (res.p_value >= alpha) return res;

    const double ma = median(std::vector<double>(a.begin(), a.end()));
    const double mb = median(std::vector<double>(b.begin(), b.end()));
    // Larger U for `a` means `a` tends to the larger values.
    double direction = ma != mb ? (ma > mb ? 1.0 : -1.0) : (res.u > mu ? 1.0 : res.u < mu ? -1.0 : 0.0);
    if (orientation == Orientation::minimize) direction = -direction;
    res.outcome = direction > 0 ? Outcome::better : direction < 0 ? Outcome::worse : Outcome::equivalent;
    return res;
}

}  // namespace moead
