#include <doctest.h>

#include <bit>
#include <cstring>
#include <limits>

#include "moead/kernels.hpp"
#include "support.hpp"

using namespace moead;
using namespace moead::kernels;

namespace {

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

}  // namespace

TEST_CASE("soa points store coordinates column-wise") {
    SoaPoints pts(3, 1);
    for (int i = 0; i < 10; ++i) pts.push_back(std::vector<double>{1.0 * i, 2.0 * i, 3.0 * i});
    CHECK(pts.size() == 10);
    CHECK(pts.at(7, 2) == 21.0);
    const auto v = pts.view();
    CHECK(v.column(1)[4] == 8.0);
}

TEST_CASE("scalar kernels match direct formulas") {
    const auto& k = scalar_table();
    const SoaPoints pts(std::vector<ObjectiveVector>{{0, 0}, {3, 4}, {1, 1}});
    const double q[] = {0, 0};
    std::vector<double> mins = {10, 10, 1};
    k.min_sq_dist_update(q, pts.view(), mins.data());
    CHECK(mins == std::vector<double>{0, 10, 1});
    const double cur[] = {1, 6, 1};
    CHECK(k.sum_min_dist(q, pts.view(), cur) == doctest::Approx(0 + 5 + 1));
    CHECK(k.sum_improvement(q, pts.view(), cur) == doctest::Approx(1 + 1 + 0));
    const double dominated[] = {2, 2};
    const double free_pt[] = {-1, 5};
    CHECK(k.any_dominates(dominated, pts.view()));
    CHECK_FALSE(k.any_dominates(free_pt, pts.view()));
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
    if (!isa_available(Isa::avx2)) {
        MESSAGE("AVX2 unavailable; equivalence not exercised");
        return;
    }
    const auto& s = scalar_table();
    const auto& v = table(Isa::avx2);
    RandomSource rng(77);
    for (int trial = 0; trial < 560; ++trial) {
        const std::size_t n = static_cast<std::size_t>(trial) % 70;
        const std::size_t dim = 2 + static_cast<std::size_t>(trial / 70) % 4;
        auto raw = test::random_points(rng, n, dim, -2.0, 2.0);
        if (trial % 4 == 0) {
            for (auto& p : raw) {
                for (auto& x : p) x = std::round(x * 2.0);
            }
        }
        SoaPoints pts(dim, 1);
        for (const auto& p : raw) pts.push_back(p);
        std::vector<double> q(dim);
        for (auto& x : q) x = rng.uniform(-2.0, 2.0);
        if (trial % 5 == 0 && n > 0) q = raw[rng.index(n)];

        std::vector<double> cur(n);
        for (auto& c : cur) {
            c = rng.uniform(0.0, 3.0);
            if (rng.bernoulli(0.1)) c = std::numeric_limits<double>::infinity();
        }
        auto mins_s = cur;
        auto mins_v = cur;
        s.min_sq_dist_update(q.data(), pts.view(), mins_s.data());
        v.min_sq_dist_update(q.data(), pts.view(), mins_v.data());
        for (std::size_t j = 0; j < n; ++j) CHECK(same_bits(mins_s[j], mins_v[j]));

        CHECK(same_bits(s.sum_min_dist(q.data(), pts.view(), cur.data()),
                        v.sum_min_dist(q.data(), pts.view(), cur.data())));
        CHECK(same_bits(s.sum_improvement(q.data(), pts.view(), cur.data()),
                        v.sum_improvement(q.data(), pts.view(), cur.data())));
        CHECK(s.any_dominates(q.data(), pts.view()) == v.any_dominates(q.data(), pts.view()));
    }
}

TEST_CASE("kernel selection reports a usable ISA") {
    CHECK(isa_available(Isa::scalar));
    CHECK_FALSE(isa_name(active_isa()).empty());
    CHECK(&table(Isa::scalar) == &scalar_table());
}
