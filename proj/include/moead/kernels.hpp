#pragma once

// Data-parallel inner loops over point sets. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant chosen at runtime. Both variants
// perform the same floating-point operations in the same order per lane, so
// their results are bit-identical (see tests/test_kernels.cpp).

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "moead/core.hpp"

namespace moead::kernels {

/// Structure-of-arrays point block: coordinate m of point j lives at
/// data[m * stride + j].
struct PointsView {
    const double* data = nullptr;
    std::size_t count = 0;
    std::size_t dim = 0;
    std::size_t stride = 0;

    const double* column(std::size_t m) const { return data + m * stride; }
};

class SoaPoints {
public:
    SoaPoints() = default;
    SoaPoints(std::size_t dim, std::size_t capacity);
    explicit SoaPoints(const std::vector<ObjectiveVector>& points);

    void push_back(std::span<const double> p);
    std::size_t size() const noexcept { return count_; }
    std::size_t dim() const noexcept { return dim_; }
    double at(std::size_t j, std::size_t m) const { return data_[m * stride_ + j]; }
    PointsView view() const { return {data_.data(), count_, dim_, stride_}; }

private:
    void grow(std::size_t new_stride);

    std::size_t dim_ = 0;
    std::size_t count_ = 0;
    std::size_t stride_ = 0;
    std::vector<double> data_;
};

enum class Isa { scalar, avx2 };

struct KernelTable {
    /// mins[j] = min(mins[j], |q - p_j|^2)
    void (*min_sq_dist_update)(const double* q, PointsView pts, double* mins);
    /// Sum over j of min(cur[j], |q - p_j|), accumulated in four interleaved lanes.
    double (*sum_min_dist)(const double* q, PointsView pts, const double* cur);
    /// Sum over j of max(0, cur[j] - |q - p_j|), same lane order.
    double (*sum_improvement)(const double* q, PointsView pts, const double* cur);
    /// True iff some p_j dominates q.
    bool (*any_dominates)(const double* q, PointsView pts);
};

const KernelTable& scalar_table();
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();

bool isa_available(Isa isa);
const KernelTable& table(Isa isa);

/// Kernels used by the library: AVX2 when available unless MOEAD_KERNELS=scalar.
const KernelTable& active();
Isa active_isa();
std::string_view isa_name(Isa isa);

}  // namespace moead::kernels
