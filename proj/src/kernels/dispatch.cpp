#include <cstdlib>
#include <cstring>

#include "moead/kernels.hpp"

namespace moead::kernels {

#if defined(MOEAD_HAVE_AVX2_KERNELS)
const KernelTable* avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(MOEAD_HAVE_AVX2_KERNELS)
    static const KernelTable* t = avx2_table_impl();
    return t;
#else
    return nullptr;
#endif
}

bool isa_available(Isa isa) { return isa == Isa::scalar || avx2_table() != nullptr; }

const KernelTable& table(Isa isa) {
    if (isa == Isa::avx2) {
        if (const auto* t = avx2_table()) return *t;
        throw ContractError("AVX2 kernels are not available on this machine");
    }
    return scalar_table();
}

Isa active_isa() {
    static const Isa isa = [] {
        const char* env = std::getenv("MOEAD_KERNELS");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::scalar;
        return avx2_table() != nullptr ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
}

const KernelTable& active() { return table(active_isa()); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

SoaPoints::SoaPoints(std::size_t dim, std::size_t capacity) : dim_(dim) { grow(capacity == 0 ? 4 : capacity); }

SoaPoints::SoaPoints(const std::vector<ObjectiveVector>& points)
    : SoaPoints(points.empty() ? 0 : points.front().size(), points.size()) {
    for (const auto& p : points) push_back(p);
}

void SoaPoints::grow(std::size_t new_stride) {
    std::vector<double> next(dim_ * new_stride);
    for (std::size_t m = 0; m < dim_; ++m) {
        std::memcpy(next.data() + m * new_stride, data_.data() + m * stride_, count_ * sizeof(double));
    }
    data_ = std::move(next);
    stride_ = new_stride;
}

void SoaPoints::push_back(std::span<const double> p) {
    if (p.size() != dim_) throw ContractError("SoaPoints::push_back: dimension mismatch");
    if (count_ == stride_) grow(stride_ == 0 ? 4 : stride_ * 2);
    for (std::size_t m = 0; m < dim_; ++m) data_[m * stride_ + count_] = p[m];
    ++count_;
}

}  // namespace moead::kernels
