#include <cmath>

#include "moead/kernels.hpp"

namespace moead::kernels {

namespace {

inline double sq_dist(const double* q, const PointsView& pts, std::size_t j) {
    double s = 0.0;
    for (std::size_t m = 0; m < pts.dim; ++m) {
        const double t = pts.column(m)[j] - q[m];
        s += t * t;
    }
    return s;
}

inline double lane_total(const double acc[4]) { return (acc[0] + acc[1]) + (acc[2] + acc[3]); }

void min_sq_dist_update(const double* q, PointsView pts, double* mins) {
    for (std::size_t j = 0; j < pts.count; ++j) {
        const double s = sq_dist(q, pts, j);
        mins[j] = mins[j] < s ? mins[j] : s;
    }
}

double sum_min_dist(const double* q, PointsView pts, const double* cur) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < pts.count; ++j) {
        const double d = std::sqrt(sq_dist(q, pts, j));
        acc[j & 3] += cur[j] < d ? cur[j] : d;
    }
    return lane_total(acc);
}

double sum_improvement(const double* q, PointsView pts, const double* cur) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < pts.count; ++j) {
        const double diff = cur[j] - std::sqrt(sq_dist(q, pts, j));
        acc[j & 3] += diff > 0.0 ? diff : 0.0;
    }
    return lane_total(acc);
}

bool any_dominates(const double* q, PointsView pts) {
    for (std::size_t j = 0; j < pts.count; ++j) {
        bool no_worse = true;
        bool better = false;
        for (std::size_t m = 0; m < pts.dim; ++m) {
            const double p = pts.column(m)[j];
            if (p > q[m]) {
                no_worse = false;
                break;
            }
            if (p < q[m]) better = true;
        }
        if (no_worse && better) return true;
    }
    return false;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{&min_sq_dist_update, &sum_min_dist, &sum_improvement, &any_dominates};
    return t;
}

}  // namespace moead::kernels
