// Compiled with -mavx2 only (no FMA) so every lane reproduces the scalar
// reference bit for bit.

#include <immintrin.h>

#include <cmath>

#include "moead/kernels.hpp"

namespace moead::kernels {

namespace {

inline __m256d sq_dist4(const double* q, const PointsView& pts, std::size_t j) {
    __m256d s = _mm256_setzero_pd();
    for (std::size_t m = 0; m < pts.dim; ++m) {
        const __m256d t = _mm256_sub_pd(_mm256_loadu_pd(pts.column(m) + j), _mm256_set1_pd(q[m]));
        s = _mm256_add_pd(s, _mm256_mul_pd(t, t));
    }
    return s;
}

inline double sq_dist1(const double* q, const PointsView& pts, std::size_t j) {
    double s = 0.0;
    for (std::size_t m = 0; m < pts.dim; ++m) {
        const double t = pts.column(m)[j] - q[m];
        s += t * t;
    }
    return s;
}

void min_sq_dist_update(const double* q, PointsView pts, double* mins) {
    std::size_t j = 0;
    for (; j + 4 <= pts.count; j += 4) {
        const __m256d s = sq_dist4(q, pts, j);
        _mm256_storeu_pd(mins + j, _mm256_min_pd(_mm256_loadu_pd(mins + j), s));
    }
    for (; j < pts.count; ++j) {
        const double s = sq_dist1(q, pts, j);
        mins[j] = mins[j] < s ? mins[j] : s;
    }
}

double sum_min_dist(const double* q, PointsView pts, const double* cur) {
    __m256d acc_v = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= pts.count; j += 4) {
        const __m256d d = _mm256_sqrt_pd(sq_dist4(q, pts, j));
        acc_v = _mm256_add_pd(acc_v, _mm256_min_pd(_mm256_loadu_pd(cur + j), d));
    }
    alignas(32) double acc[4];
    _mm256_store_pd(acc, acc_v);
    for (; j < pts.count; ++j) {
        const double d = std::sqrt(sq_dist1(q, pts, j));
        acc[j & 3] += cur[j] < d ? cur[j] : d;
    }
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double sum_improvement(const double* q, PointsView pts, const double* cur) {
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc_v = zero;
    std::size_t j = 0;
    for (; j + 4 <= pts.count; j += 4) {
        const __m256d d = _mm256_sqrt_pd(sq_dist4(q, pts, j));
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(cur + j), d);
        acc_v = _mm256_add_pd(acc_v, _mm256_max_pd(diff, zero));
    }
    alignas(32) double acc[4];
    _mm256_store_pd(acc, acc_v);
    for (; j < pts.count; ++j) {
        const double diff = cur[j] - std::sqrt(sq_dist1(q, pts, j));
        acc[j & 3] += diff > 0.0 ? diff : 0.0;
    }
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

bool any_dominates(const double* q, PointsView pts) {
    std::size_t j = 0;
    for (; j + 4 <= pts.count; j += 4) {
        __m256d no_worse = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
        __m256d better = _mm256_setzero_pd();
        for (std::size_t m = 0; m < pts.dim; ++m) {
            const __m256d p = _mm256_loadu_pd(pts.column(m) + j);
            const __m256d qv = _mm256_set1_pd(q[m]);
            no_worse = _mm256_and_pd(no_worse, _mm256_cmp_pd(p, qv, _CMP_LE_OQ));
            better = _mm256_or_pd(better, _mm256_cmp_pd(p, qv, _CMP_LT_OQ));
        }
        if (_mm256_movemask_pd(_mm256_and_pd(no_worse, better)) != 0) return true;
    }
    for (; j < pts.count; ++j) {
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

const KernelTable* avx2_table_impl() {
    static const KernelTable t{&min_sq_dist_update, &sum_min_dist, &sum_improvement, &any_dominates};
    return __builtin_cpu_supports("avx2") ? &t : nullptr;
}

}  // namespace moead::kernels
