#pragma once

// Shared generators and brute-force oracles for the unit tests.

#include <algorithm>
#include <cmath>
#include <vector>

#include "moead/core.hpp"

namespace moead::test {

inline std::vector<ObjectiveVector> random_points(RandomSource& rng, std::size_t n, std::size_t dim, double lo = 0.0,
                                                  double hi = 1.0) {
    std::vector<ObjectiveVector> pts(n, ObjectiveVector(dim));
    for (auto& p : pts) {
        for (auto& v : p) v = rng.uniform(lo, hi);
    }
    return pts;
}

/// Mutually non-dominated points: random positive directions scaled onto an
/// L^q sphere with q drawn from {0.5, 1, 2}, giving convex, linear or concave fronts.
inline std::vector<ObjectiveVector> random_front(RandomSource& rng, std::size_t n, std::size_t dim) {
    const double qs[] = {0.5, 1.0, 2.0};
    const double q = qs[rng.index(3)];
    std::vector<ObjectiveVector> pts(n, ObjectiveVector(dim));
    for (auto& p : pts) {
        double norm = 0.0;
        for (auto& v : p) {
            v = rng.uniform(0.01, 1.0);
            norm += std::pow(v, q);
        }
        norm = std::pow(norm, 1.0 / q);
        for (auto& v : p) v /= norm;
    }
    return pts;
}

inline bool brute_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

/// Inclusion-exclusion over all non-empty subsets; exponential, for n <= ~12.
inline double brute_hypervolume(const std::vector<ObjectiveVector>& pts, double r) {
    std::vector<ObjectiveVector> in;
    for (const auto& p : pts) {
        if (std::all_of(p.begin(), p.end(), [r](double v) { return v < r; })) in.push_back(p);
    }
    const std::size_t n = in.size();
    if (n == 0) return 0.0;
    const std::size_t dim = in.front().size();
    double total = 0.0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<double> corner(dim, -1e300);
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                ++bits;
                for (std::size_t m = 0; m < dim; ++m) corner[m] = std::max(corner[m], in[i][m]);
            }
        }
        double vol = 1.0;
        for (double c : corner) vol *= r - c;
        total += (bits % 2 == 1) ? vol : -vol;
    }
    return total;
}

inline double brute_igd(const std::vector<ObjectiveVector>& pts, const std::vector<ObjectiveVector>& ref) {
    double sum = 0.0;
    for (const auto& q : ref) {
        double best = 1e300;
        for (const auto& p : pts) {
            double s = 0.0;
            for (std::size_t m = 0; m < q.size(); ++m) s += (p[m] - q[m]) * (p[m] - q[m]);
            best = std::min(best, std::sqrt(s));
        }
        sum += best;
    }
    return sum / static_cast<double>(ref.size());
}

}  // namespace moead::test
