#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "moead/indicators.hpp"
#include "support.hpp"

using namespace moead;

TEST_CASE("indicator normalization") {
    HvFrame frame{{0, 0, 0}, {2, 2, 2}};
    CHECK(normalize_for_indicator(std::vector<double>{1, 1, 1}, frame) == ObjectiveVector{0.5, 0.5, 0.5});
    CHECK(normalize_for_indicator(std::vector<double>{0, 0, 0}, frame) == ObjectiveVector{0, 0, 0});
    CHECK(normalize_for_indicator(std::vector<double>{2, 2, 2}, frame) == ObjectiveVector{1, 1, 1});
    HvFrame flat{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(normalize_for_indicator(std::vector<double>{0.5, 1}, flat), ContractError);
    const auto f = HvFrame::for_problem(parse_problem_name("dtlz1"));
    CHECK(f.nadir[0] == doctest::Approx(0.5));
    CHECK(f.r == 1.1);
}

TEST_CASE("hypervolume examples") {
    CHECK(hypervolume({{0, 0, 0}}, 1.1) == doctest::Approx(1.331).epsilon(1e-12));
    CHECK(hypervolume({{0.5, 0.5, 0.5}}, 1.1) == doctest::Approx(0.216).epsilon(1e-12));
    CHECK(hypervolume({{0.5, 0.5, 0.5}, {0.7, 0.6, 0.9}}, 1.1) == doctest::Approx(0.216).epsilon(1e-12));
    CHECK(hypervolume({{1.2, 0, 0}}, 1.1) == 0.0);
    CHECK(hypervolume({{1.1, 0, 0}}, 1.1) == 0.0);
    CHECK(hypervolume({}, 1.1) == 0.0);
    CHECK(hypervolume({{0.5}, {0.2}}, 1.0) == doctest::Approx(0.8));
    CHECK(hypervolume({{0, 0.5}, {0.5, 0}}, 1.0) == doctest::Approx(0.75));
    CHECK(hypervolume_box_fraction({{0, 0, 0}}, 1.1) == doctest::Approx(1.0));
}

TEST_CASE("hypervolume agrees with inclusion-exclusion") {
    RandomSource rng(31);
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t dim = 2 + trial % 4;
        const std::size_t n = 1 + rng.index(8);
        auto pts = trial % 2 == 0 ? test::random_front(rng, n, dim) : test::random_points(rng, n, dim, 0.0, 1.2);
        if (trial % 7 == 0) {
            for (auto& p : pts) {
                for (auto& v : p) v = std::round(v * 3.0) / 3.0;
            }
        }
        CHECK(std::abs(hypervolume(pts, 1.1) - test::brute_hypervolume(pts, 1.1)) < 1e-9);
    }
}

TEST_CASE("hypervolume is monotone and order independent") {
    RandomSource rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 3 + trial % 2;
        auto pts = test::random_points(rng, 30, dim);
        const double hv = hypervolume(pts, 1.1);
        auto shuffled = pts;
        for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.index(i)]);
        CHECK(hypervolume(shuffled, 1.1) == doctest::Approx(hv).epsilon(1e-12));

        auto more = pts;
        more.push_back(test::random_points(rng, 1, dim, 0.0, 1.2)[0]);
        CHECK(hypervolume(more, 1.1) >= hv - 1e-12);

        // Shrinking a non-dominated point towards the origin enlarges the dominated region.
        auto better = pts;
        const auto nd = nondominated_filter(pts);
        ObjectiveVector p = pts[nd[rng.index(nd.size())]];
        for (auto& v : p) v *= 0.9;
        better.push_back(p);
        CHECK(hypervolume(better, 1.1) > hv);
    }
}

TEST_CASE("hv_contribution matches the hypervolume difference") {
    RandomSource rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        auto set = test::random_front(rng, 1 + rng.index(20), 3);
        const auto p = test::random_points(rng, 1, 3, 0.0, 1.05)[0];
        auto with = set;
        with.push_back(p);
        CHECK(hv_contribution(p, set, 1.1) ==
              doctest::Approx(hypervolume(with, 1.1) - hypervolume(set, 1.1)).epsilon(1e-9));
    }
}

TEST_CASE("igd examples and properties") {
    CHECK(igd({{1, 0}, {0, 1}}, {{0, 0}}) == doctest::Approx(1.0));
    CHECK(igd({{0, 0}}, {{0, 0}, {1, 1}}) == doctest::Approx(std::sqrt(2.0) / 2.0));
    CHECK(igd({{0.2, 0.3}, {0.5, 0.1}}, {{0.2, 0.3}, {0.5, 0.1}}) == 0.0);
    CHECK_THROWS_AS(igd({}, {{0, 0}}), ContractError);

    RandomSource rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pts = test::random_points(rng, 1 + rng.index(40), 3);
        const auto ref = test::random_points(rng, 1 + rng.index(60), 3);
        const double v = igd(pts, ref);
        CHECK(v >= 0.0);
        CHECK(v == doctest::Approx(test::brute_igd(pts, ref)).epsilon(1e-12));
        auto rev = ref;
        std::reverse(rev.begin(), rev.end());
        CHECK(igd(pts, rev) == doctest::Approx(v).epsilon(1e-12));
        auto superset = pts;
        superset.insert(superset.end(), ref.begin(), ref.end());
        CHECK(igd(superset, ref) == 0.0);
    }
}

TEST_CASE("frame-aware indicators normalize first") {
    HvFrame frame{{0, 0}, {2, 4}};
    CHECK(hypervolume_in_frame({{0, 0}}, frame) == doctest::Approx(1.21));
    CHECK(igd_in_frame({{2, 0}}, {{0, 0}}, frame) == doctest::Approx(1.0));
}
