#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "moead/moead.hpp"
#include "moead/problems.hpp"
#include "support.hpp"

using namespace moead;

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

MoeadConfig small_config(ScalarizerKind kind, std::size_t budget) {
    MoeadConfig cfg;
    cfg.scalarizer = ScalarizerChoice::make(kind, kind == ScalarizerKind::ipbi ? 0.1 : 5.0);
    cfg.budget = budget;
    return cfg;
}

struct EventCopy {
    std::size_t generation, subproblem;
    Solution previous, incoming;
    std::vector<double> weight;
    ObjectiveVector z_min, z_nad;
    double epsilon;
};

}  // namespace

TEST_CASE("neighborhood sizes") {
    CHECK(NeighborhoodSize::of_fraction(0.05).resolve(91) == 5);
    CHECK(NeighborhoodSize::of_fraction(0.2).resolve(91) == 19);
    CHECK(NeighborhoodSize::of_fraction(1.0).resolve(91) == 91);
    CHECK(NeighborhoodSize::of_fraction(0.01).resolve(91) == 2);
    CHECK(NeighborhoodSize::of_count(20).resolve(91) == 20);
    CHECK(NeighborhoodSize::of_count(500).resolve(91) == 91);
}

TEST_CASE("neighborhoods are the nearest weight vectors") {
    const auto lat = das_dennis(3, 12);
    const auto all = build_neighborhoods(lat, NeighborhoodSize::of_fraction(1.0));
    for (const auto& n : all) {
        auto sorted = n;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted.size() == 91);
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    const auto five = build_neighborhoods(lat, NeighborhoodSize::of_fraction(0.05));
    for (std::size_t j = 0; j < five.size(); ++j) {
        REQUIRE(five[j].size() == 5);
        CHECK(five[j][0] == j);
        // Every excluded index is at least as far as the farthest included one.
        const double radius = sq_dist(lat.vectors[j], lat.vectors[five[j].back()]);
        for (std::size_t i = 1; i < five[j].size(); ++i) {
            CHECK(sq_dist(lat.vectors[j], lat.vectors[five[j][i - 1]]) <=
                  sq_dist(lat.vectors[j], lat.vectors[five[j][i]]));
        }
        for (std::size_t k = 0; k < lat.size(); ++k) {
            if (std::find(five[j].begin(), five[j].end(), k) == five[j].end()) {
                CHECK(sq_dist(lat.vectors[j], lat.vectors[k]) >= radius);
            }
        }
    }
    const auto units = build_neighborhoods(das_dennis(3, 1), NeighborhoodSize::of_fraction(2.0 / 3.0));
    CHECK(units == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}, {2, 0}});
}

TEST_CASE("budget accounting") {
    auto problem = make_problem(parse_problem_name("dtlz2"));
    MoeadConfig cfg;
    CHECK(max_generation(cfg) == 109);
    const auto run = run_moead(*problem, cfg, 1);
    CHECK(run.archive.size() == 10000);
    CHECK(run.generations == 109);
    CHECK(run.final_population.size() == 91);
    CHECK(run.problem == "dtlz2");
    for (std::size_t i = 0; i < run.archive.size(); ++i) CHECK(run.archive[i].eval_index == i);

    cfg.budget = 91 * 5;
    const auto exact = run_moead(*problem, cfg, 1);
    CHECK(exact.archive.size() == 455);
    CHECK(exact.generations == 4);

    cfg.budget = 91;
    CHECK(run_moead(*problem, cfg, 1).generations == 0);
    cfg.budget = 90;
    CHECK_THROWS_AS(run_moead(*problem, cfg, 1), ContractError);
    cfg.budget = 1000;
    cfg.population = 90;
    CHECK_THROWS_AS(run_moead(*problem, cfg, 1), ContractError);
}

TEST_CASE("runs are deterministic per seed") {
    auto problem = make_problem(parse_problem_name("wfg4"));
    for (auto kind : {ScalarizerKind::tch, ScalarizerKind::ipbi}) {
        const auto cfg = small_config(kind, 1500);
        const auto a = run_moead(*problem, cfg, 7);
        const auto b = run_moead(*problem, cfg, 7);
        CHECK(a.archive == b.archive);
        CHECK(a.final_population == b.final_population);
        CHECK_FALSE(run_moead(*problem, cfg, 8).archive == a.archive);
    }
}

TEST_CASE("replacement only improves incumbents under the anchors in effect") {
    RandomSource pick(3);
    for (auto kind : {ScalarizerKind::ws, ScalarizerKind::tch, ScalarizerKind::mtch, ScalarizerKind::pbi,
                      ScalarizerKind::ipbi}) {
        for (bool norm : {true, false}) {
            auto cfg = small_config(kind, 2000);
            cfg.normalize = norm;
            cfg.eps_ini = 0.5;
            cfg.eps_end = -0.01;
            cfg.mating = NeighborhoodSize::of_fraction(0.15);
            cfg.replacement = NeighborhoodSize::of_fraction(0.3);
            auto problem = make_problem(parse_problem_name(norm ? "minus-dtlz1" : "dtlz2"));
            std::vector<EventCopy> events;
            RunObserver obs{[&](const ReplacementEvent& e) {
                events.push_back({e.generation, e.subproblem, e.previous, e.incoming, e.weight, e.z_min, e.z_nad,
                                  e.epsilon});
            }};
            const auto run = run_moead(*problem, cfg, 11, &obs);
            CHECK(events.size() > 50);

            std::vector<std::size_t> last_generation(cfg.population, 0);
            for (const auto& e : events) {
                // z_min equals the minimum over every evaluation up to the incoming child.
                ObjectiveVector zmin(3, 1e300);
                for (std::size_t i = 0; i <= e.incoming.eval_index; ++i) {
                    for (std::size_t m = 0; m < 3; ++m) zmin[m] = std::min(zmin[m], run.archive[i].objectives[m]);
                }
                CHECK(zmin == e.z_min);
                CHECK(e.generation >= last_generation[e.subproblem]);
                last_generation[e.subproblem] = e.generation;

                ObjectiveVector z_star(3), z_nad = e.z_nad;
                auto fp = e.previous.objectives, fi = e.incoming.objectives;
                if (norm) {
                    ObjectiveVector scale(3);
                    for (std::size_t m = 0; m < 3; ++m) {
                        scale[m] = e.z_nad[m] - e.z_min[m] + cfg.eps_norm;
                        fp[m] = (fp[m] - e.z_min[m]) / scale[m];
                        fi[m] = (fi[m] - e.z_min[m]) / scale[m];
                        z_star[m] = -e.epsilon;
                        z_nad[m] = (e.z_nad[m] - e.z_min[m]) / scale[m];
                    }
                } else {
                    for (std::size_t m = 0; m < 3; ++m) z_star[m] = e.z_min[m] - e.epsilon;
                }
                const double before = scalarize(cfg.scalarizer, fp, e.weight, z_star, z_nad);
                const double after = scalarize(cfg.scalarizer, fi, e.weight, z_star, z_nad);
                CHECK(strictly_better(kind, after, before));
            }
            // Final incumbents are archived solutions.
            for (const auto& s : run.final_population) CHECK(run.archive[s.eval_index] == s);
        }
    }
}

TEST_CASE("z_min is non-increasing along the archive") {
    auto problem = make_problem(parse_problem_name("wfg1"));
    const auto run = run_moead(*problem, small_config(ScalarizerKind::pbi, 1200), 5);
    ObjectiveVector prev(3, 1e300);
    for (const auto& s : run.archive) {
        ObjectiveVector cur = prev;
        for (std::size_t m = 0; m < 3; ++m) cur[m] = std::min(cur[m], s.objectives[m]);
        for (std::size_t m = 0; m < 3; ++m) CHECK(cur[m] <= prev[m]);
        prev = cur;
    }
}

TEST_CASE("configuration files") {
    std::istringstream in(
        "# tuned\n"
        "scalarizer = PBI\n"
        "theta = 1.5\n"
        "eps_ini = 0.005  # trailing comment\n"
        "eps_end = -0.01\n"
        "t_mate_frac = 0.3\n"
        "t_rep_size = 12\n"
        "crossover = LAX\n"
        "p_c = 0.4\n"
        "mutation = Gaussian\n"
        "p_m = 1/D\n"
        "budget = 5000\n");
    const auto cfg = parse_config(in);
    CHECK(cfg.scalarizer == ScalarizerChoice::make(ScalarizerKind::pbi, 1.5));
    CHECK(cfg.eps_end == -0.01);
    CHECK(cfg.mating == NeighborhoodSize::of_fraction(0.3));
    CHECK(cfg.replacement == NeighborhoodSize::of_count(12));
    CHECK(cfg.variation.crossover == CrossoverKind::lax);
    CHECK_FALSE(cfg.variation.p_m.has_value());
    CHECK(cfg.budget == 5000);

    std::istringstream back(format_config(cfg));
    CHECK(parse_config(back) == cfg);

    std::istringstream ipbi("scalarizer = ipbi\n");
    CHECK(parse_config(ipbi).scalarizer.theta == std::optional<double>(0.1));
    std::istringstream tch("scalarizer = TCH\ntheta = 3\n");
    CHECK_FALSE(parse_config(tch).scalarizer.theta.has_value());

    auto expect_line = [](const std::string& text, std::size_t line) {
        std::istringstream s(text);
        try {
            parse_config(s);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("scalarizer = TCH\nbogus = 1\n", 2);
    expect_line("\n\np_c = abc\n", 3);
    expect_line("p_c 1\n", 1);
    expect_line("scalarizer = NBI\n", 1);
    expect_line("population = 2.5\n", 1);
    CHECK_THROWS_AS(load_config("/nonexistent/moead.cfg"), IoError);

    RandomSource rng(9);
    for (int t = 0; t < 200; ++t) {
        MoeadConfig c;
        const auto kind = static_cast<ScalarizerKind>(rng.index(5));
        c.scalarizer = ScalarizerChoice::make(kind, rng.uniform(0.0, 10.0));
        c.eps_ini = rng.uniform(0.0, 10.0);
        c.eps_end = rng.uniform(-5.0, 0.1);
        c.mating = NeighborhoodSize::of_fraction(rng.uniform(0.05, 0.4));
        c.replacement = rng.bernoulli(0.5) ? NeighborhoodSize::of_count(2 + rng.index(30))
                                           : NeighborhoodSize::of_fraction(rng.uniform(0.05, 1.0));
        c.eps_norm = rng.uniform(1e-6, 25.0);
        c.normalize = rng.bernoulli(0.8);
        c.variation.crossover = static_cast<CrossoverKind>(rng.index(3));
        c.variation.mutation = static_cast<MutationKind>(rng.index(3));
        c.variation.p_c = rng.uniform();
        if (rng.bernoulli(0.7)) c.variation.p_m = rng.uniform();
        c.variation.sigma_frac = rng.uniform(0.01, 1.0);
        std::istringstream s(format_config(c));
        CHECK(parse_config(s) == c);
    }
}

TEST_CASE("config validation") {
    MoeadConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.scalarizer.theta = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg = {};
    cfg.scalarizer = ScalarizerChoice{ScalarizerKind::pbi, std::nullopt};
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg = {};
    cfg.mating = NeighborhoodSize::of_fraction(0.0);
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg = {};
    cfg.eps_norm = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ContractError);
    cfg.normalize = false;
    CHECK_NOTHROW(cfg.validate());
}
