// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
// `acceptance --full` runs criterion 5 on all 26 problems instead of the 6-problem subset.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "moead/experiments.hpp"
#include "moead/subset_selection.hpp"
#include "support.hpp"

using namespace moead;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Domain, typename Value>
bool in_domain(const Domain& d, Value v) {
    return std::find(d.begin(), d.end(), v) != d.end();
}

bool on_grid(double v, int steps, double hi, double tol) {
    const double k = std::round(v / hi * steps);
    return k >= 0 && k <= steps && std::abs(hi * k / steps - v) <= tol;
}

// 1. Codec totality and boundary genomes.
Verdict codec_totality() {
    const auto start = Clock::now();
    RandomSource rng(20240101);
    std::size_t bad = 0;
    for (int i = 0; i < 1000000; ++i) {
        const auto g = ConfigGenome::random(rng);
        const auto c = decode_genome(g);
        const bool ok = in_domain(domains::scalarizers, c.scalarizer.kind) &&
                        c.scalarizer.theta.has_value() == uses_penalty(c.scalarizer.kind) &&
                        on_grid(decode_theta(g), 1023, 10.0, 1e-12) && in_domain(domains::eps_ini, c.eps_ini) &&
                        in_domain(domains::eps_end, c.eps_end) &&
                        in_domain(domains::neighborhood, c.mating.fraction) &&
                        in_domain(domains::neighborhood, c.replacement.fraction) &&
                        in_domain(domains::eps_norm, c.eps_norm) && in_domain(domains::crossovers, c.variation.crossover) &&
                        in_domain(domains::mutations, c.variation.mutation) && on_grid(c.variation.p_c, 31, 1.0, 1e-15) &&
                        c.variation.p_m && on_grid(*c.variation.p_m, 31, 1.0, 1e-15);
        if (!ok) ++bad;
    }
    const double elapsed = seconds_since(start);

    ConfigGenome zeros, ones;
    ones.bits.fill(1);
    const auto lo = decode_genome(zeros);
    const auto hi = decode_genome(ones);
    const bool lo_ok = lo.scalarizer.kind == domains::scalarizers.front() && decode_theta(zeros) == domains::theta_lo &&
                       lo.eps_ini == domains::eps_ini.front() && lo.eps_end == domains::eps_end.front() &&
                       lo.mating.fraction == domains::neighborhood.front() &&
                       lo.replacement.fraction == domains::neighborhood.front() &&
                       lo.eps_norm == domains::eps_norm.front() && lo.variation.crossover == domains::crossovers.front() &&
                       lo.variation.p_c == 0.0 && lo.variation.mutation == domains::mutations.front() &&
                       lo.variation.p_m == 0.0;
    const bool hi_ok = hi.scalarizer.kind == domains::scalarizers.back() && decode_theta(ones) == domains::theta_hi &&
                       hi.eps_ini == domains::eps_ini.back() && hi.eps_end == domains::eps_end.back() &&
                       hi.mating.fraction == domains::neighborhood.back() &&
                       hi.replacement.fraction == domains::neighborhood.back() &&
                       hi.eps_norm == domains::eps_norm.back() && hi.variation.crossover == domains::crossovers.back() &&
                       hi.variation.p_c == 1.0 && hi.variation.mutation == domains::mutations.back() &&
                       hi.variation.p_m == 1.0;
    return {bad == 0 && lo_ok && hi_ok && elapsed < 10.0,
            fmt::format("1e6 genomes, {} outside domains, boundaries {}/{}, {:.2f} s (limit 10 s)", bad,
                        lo_ok ? "ok" : "wrong", hi_ok ? "ok" : "wrong", elapsed)};
}

// 2. Hypervolume against inclusion-exclusion.
Verdict hv_oracle() {
    const auto start = Clock::now();
    RandomSource rng(2);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const auto pts = test::random_front(rng, 1 + rng.index(8), 3);
        worst = std::max(worst, std::abs(hypervolume(pts, 1.1) - test::brute_hypervolume(pts, 1.1)));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-9 && elapsed < 30.0,
            fmt::format("1000 sets, max |error| {:.2e} (limit 1e-9), {:.2f} s (limit 30 s)", worst, elapsed)};
}

std::vector<std::size_t> eager_greedy_hv(const std::vector<ObjectiveVector>& pts, std::size_t k, double r) {
    std::vector<std::size_t> chosen;
    std::vector<ObjectiveVector> selected;
    std::vector<bool> used(pts.size(), false);
    double base = 0.0;
    while (chosen.size() < std::min(k, pts.size())) {
        double best = -1.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (used[i]) continue;
            selected.push_back(pts[i]);
            const double gain = hypervolume(selected, r) - base;
            selected.pop_back();
            if (gain > best) {
                best = gain;
                arg = i;
            }
        }
        used[arg] = true;
        chosen.push_back(arg);
        selected.push_back(pts[arg]);
        base = hypervolume(selected, r);
    }
    return chosen;
}

// 3. Lazy greedy HV selection equals the eager method.
Verdict lazy_equals_eager() {
    const auto start = Clock::now();
    RandomSource rng(3);
    std::size_t mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        const auto pts = test::random_front(rng, 200, 3);
        if (greedy_hv_select(pts, 91, 1.1) != eager_greedy_hv(pts, 91, 1.1)) ++mismatches;
    }
    const double elapsed = seconds_since(start);
    return {mismatches == 0 && elapsed < 300.0,
            fmt::format("200 fronts (n=200, k=91), {} mismatches, {:.1f} s (limit 300 s)", mismatches, elapsed)};
}

// 4. Standard variants on DTLZ2 against the published means.
Verdict dtlz2_reproduction() {
    const auto start = Clock::now();
    auto plan = parse_plan(R"({"problems": ["dtlz2"], "variants": ["TCH", "PBI", "WS"], "frameworks": ["fp"]})");
    const auto res = run_plan(plan);
    const double targets[] = {0.5303, 0.5552, 0.2487};
    bool ok = true;
    std::string detail;
    for (std::size_t v = 0; v < 3; ++v) {
        const double m = mean(res.cell(0, v).at(Framework::final_population, Indicator::hv));
        ok = ok && std::abs(m - targets[v]) <= 0.03;
        detail += fmt::format("{} {:.4f} (target {:.4f}), ", res.variants[v], m, targets[v]);
    }
    return {ok, detail + fmt::format("31 runs each, tolerance 0.03, {:.1f} s", seconds_since(start))};
}

// 5. Solution selection beats the final population in most cells.
Verdict framework_dominance(bool full) {
    const auto start = Clock::now();
    ExperimentPlan plan;
    if (full) {
        for (const auto& s : standard_problem_suite()) plan.problems.push_back(s.name());
        const auto front = empirical_front(parse_problem_name("wfg3"), 5, 10000, 99);
        const auto path = std::filesystem::temp_directory_path() / "moead_wfg3_reference.txt";
        std::ofstream out(path);
        write_real_rows(out, front);
        plan.reference_files["wfg3"] = path.string();
    } else {
        plan.problems = {"dtlz2", "dtlz4", "wfg1", "wfg4", "minus-dtlz1", "minus-wfg7"};
    }
    for (const auto& name : standard_variant_names()) plan.variants.push_back({name, VariantSpec::Kind::standard, name});
    plan.workers = default_workers();
    const auto res = run_plan(plan);
    std::size_t wins = 0;
    std::string losers;
    for (const auto& cell : res.cells) {
        const double fp = mean(cell.at(Framework::final_population, Indicator::hv));
        const double ss = mean(cell.at(Framework::solution_selection, Indicator::hv));
        if (ss >= fp) {
            ++wins;
        } else {
            losers += fmt::format(" {}/{}", cell.problem, cell.variant);
        }
    }
    const double share = static_cast<double>(wins) / static_cast<double>(res.cells.size());
    const double elapsed = seconds_since(start);
    const bool in_time = full || elapsed < 1200.0;
    return {share >= 0.9 && in_time,
            fmt::format("{}/{} cells with SS mean >= FP mean ({:.1f}%, need 90%){}{}, {:.1f} s{}", wins,
                        res.cells.size(), 100.0 * share, losers.empty() ? "" : "; below:", losers, elapsed,
                        full ? "" : " (limit 1200 s)")};
}

// 6. Epsilon schedule endpoints and linearity.
Verdict epsilon_schedule_check() {
    RandomSource rng(6);
    bool ends = true;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double ini = domains::eps_ini[rng.index(domains::eps_ini.size())] + rng.uniform();
        const double end = domains::eps_end[rng.index(domains::eps_end.size())] - rng.uniform();
        const std::size_t T = trial == 0 ? 109 : 2 + rng.index(300);
        ReferencePointState s(3, ini, end, T);
        std::vector<double> e;
        for (std::size_t t = 1; t <= T; ++t) {
            s.generation = t;
            e.push_back(epsilon_schedule(s)[0]);
        }
        ends = ends && e.front() == ini && e.back() == end;
        const double scale = std::max(std::abs(ini), std::abs(end));
        for (std::size_t t = 1; t + 1 < T; ++t) {
            worst = std::max(worst, std::abs(e[t + 1] - 2.0 * e[t] + e[t - 1]) / scale);
        }
    }
    return {ends && worst <= 1e-14, fmt::format("endpoints {}, max relative second difference {:.2e} (limit 1e-14)",
                                               ends ? "exact" : "inexact", worst)};
}

// 7. Engine invariants.
Verdict moead_invariants() {
    const auto start = Clock::now();
    std::size_t violations = 0, events = 0;
    for (auto kind : {ScalarizerKind::ws, ScalarizerKind::tch, ScalarizerKind::mtch, ScalarizerKind::pbi,
                      ScalarizerKind::ipbi}) {
        auto cfg = standard_variant(scalarizer_name(kind));
        cfg.eps_ini = 1.0;
        cfg.eps_end = -0.01;
        auto problem = make_problem(parse_problem_name("wfg4"));
        RunObserver obs{[&](const ReplacementEvent& e) {
            ++events;
            ObjectiveVector z_star(3), z_nad(3), fp(3), fi(3);
            for (std::size_t m = 0; m < 3; ++m) {
                const double scale = e.z_nad[m] - e.z_min[m] + cfg.eps_norm;
                fp[m] = (e.previous.objectives[m] - e.z_min[m]) / scale;
                fi[m] = (e.incoming.objectives[m] - e.z_min[m]) / scale;
                z_star[m] = -e.epsilon;
                z_nad[m] = (e.z_nad[m] - e.z_min[m]) / scale;
            }
            const double before = scalarize(cfg.scalarizer, fp, e.weight, z_star, z_nad);
            const double after = scalarize(cfg.scalarizer, fi, e.weight, z_star, z_nad);
            if (!strictly_better(kind, after, before)) ++violations;
        }};
        const auto run = run_moead(*problem, cfg, 1, &obs);
        if (run.archive.size() != cfg.budget) ++violations;
        const auto again = run_moead(*problem, cfg, 1);
        if (!(again.archive == run.archive)) ++violations;
    }

    auto plan = parse_plan(R"({"problems": ["dtlz2", "minus-wfg4"], "variants": ["TCH", "IPBI"], "runs": 4,
                               "budget": 3000})");
    plan.workers = 1;
    const auto serial = run_plan(plan);
    plan.workers = 4;
    const auto parallel = run_plan(plan);
    bool same = true;
    for (std::size_t i = 0; i < serial.cells.size(); ++i) same = same && serial.cells[i].values == parallel.cells[i].values;
    return {violations == 0 && events > 0 && same,
            fmt::format("{} replacements checked, {} violations, worker-count determinism {}, {:.1f} s", events,
                        violations, same ? "holds" : "broken", seconds_since(start))};
}

// 8. Rank-sum test against an independent implementation.
Verdict wilcoxon_oracle() {
    std::ifstream in(std::string(MOEAD_TEST_DATA_DIR) + "/wilcoxon_oracle.tsv");
    if (!in) return {false, "oracle file missing"};
    std::string line;
    std::size_t cases = 0, tied = 0;
    double worst = 0.0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string p, a, b;
        std::getline(ss, p, '\t');
        std::getline(ss, a, '\t');
        std::getline(ss, b, '\t');
        auto parse = [](const std::string& s) {
            std::vector<double> v;
            std::stringstream cs(s);
            std::string f;
            while (std::getline(cs, f, ',')) v.push_back(std::stod(f));
            return v;
        };
        const auto xa = parse(a), xb = parse(b);
        auto all = xa;
        all.insert(all.end(), xb.begin(), xb.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) ++tied;
        const double got = wilcoxon_rank_sum(xa, xb, Orientation::maximize).p_value;
        worst = std::max(worst, std::abs(got - std::stod(p)));
        ++cases;
    }
    return {cases >= 100 && tied > 0 && worst <= 1e-6,
            fmt::format("{} pairs ({} with ties), max |dp| {:.2e} (limit 1e-6)", cases, tied, worst)};
}

// 9. Tuner elitism, a reduced campaign against random search, and preset representability.
Verdict tuner_checks() {
    const auto start = Clock::now();
    const auto spec = parse_problem_name("dtlz2");
    auto problem = make_problem(spec);
    const auto frame = HvFrame::for_problem(spec);

    TunerConfig fixed;
    fixed.mu = 10;
    fixed.generations = 10;
    fixed.fixed_frame = frame;
    const auto elite = tune_moead(*problem, fixed, 1);
    bool monotone = true;
    for (std::size_t g = 1; g < elite.log.size(); ++g) {
        monotone = monotone && elite.log[g].best_fitness >= elite.log[g - 1].best_fitness;
    }

    TunerConfig reduced;
    reduced.mu = 10;
    reduced.generations = 10;
    const auto tuned = tune_moead(*problem, reduced, 2);
    const double tuned_fitness = evaluate_config(tuned.best_config, *problem, Framework::final_population,
                                                 tuned.fitness_seeds, frame);
    RandomSource rng(9);
    std::vector<MoeadConfig> randoms;
    for (int i = 0; i < 100; ++i) randoms.push_back(decode_genome(ConfigGenome::random(rng)));
    std::vector<double> random_fitness(randoms.size());
    parallel_for(randoms.size(), default_workers(), [&](std::size_t i) {
        random_fitness[i] =
            evaluate_config(randoms[i], *problem, Framework::final_population, tuned.fitness_seeds, frame);
    });
    const double random_mean = mean(random_fitness);

    std::size_t rows = 0, unrepresentable = 0;
    for (auto name : {"auto_fp", "auto_ss"}) {
        std::ifstream in(bundled_preset_path(name));
        const auto snapped = load_presets(bundled_preset_path(name));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("problem", 0) == 0) continue;
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string x;
            while (std::getline(ss, x, '\t')) f.push_back(x);
            ++rows;
            const auto& cfg = snapped.at(f[0]);
            bool ok = encode_config(cfg).has_value() && scalarizer_name(cfg.scalarizer.kind) == f[1];
            if (f[2] != "-") ok = ok && std::abs(*cfg.scalarizer.theta - std::stod(f[2])) <= 5e-5;
            if (f[9] != "-") ok = ok && std::abs(cfg.variation.p_c - std::stod(f[9])) <= 5e-5;
            ok = ok && std::abs(*cfg.variation.p_m - std::stod(f[11])) <= 5e-5;
            if (!ok) ++unrepresentable;
        }
    }
    const double elapsed = seconds_since(start);
    return {monotone && tuned_fitness > random_mean && rows == 52 && unrepresentable == 0 && elapsed < 1800.0,
            fmt::format("fixed-frame best fitness {}; tuned {:.4f} vs random mean {:.4f}; {}/{} preset rows "
                        "representable; {:.1f} s (limit 1800 s)",
                        monotone ? "non-decreasing" : "decreased", tuned_fitness, random_mean, rows - unrepresentable,
                        rows, elapsed)};
}

// 10. Problem definitions.
Verdict problem_correctness() {
    double sphere = 0.0, simplex = 0.0;
    for (const auto& f : sample_true_front(parse_problem_name("dtlz2"), 10000).points) {
        sphere = std::max(sphere, std::abs(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] - 1.0));
    }
    for (const auto& f : sample_true_front(parse_problem_name("dtlz1"), 10000).points) {
        simplex = std::max(simplex, std::abs(f[0] + f[1] + f[2] - 0.5));
    }
    RandomSource rng(10);
    std::size_t mismatches = 0;
    for (const auto& spec : standard_problem_suite()) {
        auto base = make_problem(spec);
        auto twice = negate(negate(base));
        for (int t = 0; t < 100; ++t) {
            std::vector<double> x(base->num_variables());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(base->lower_bounds()[i], base->upper_bounds()[i]);
            const auto a = base->evaluate(x);
            const auto b = twice->evaluate(x);
            for (std::size_t m = 0; m < a.size(); ++m) {
                if (std::bit_cast<std::uint64_t>(a[m]) != std::bit_cast<std::uint64_t>(b[m])) ++mismatches;
            }
        }
    }
    return {sphere <= 1e-12 && simplex <= 1e-12 && mismatches == 0,
            fmt::format("DTLZ2 max |sum f^2 - 1| {:.1e}, DTLZ1 max |sum f - 0.5| {:.1e} (limit 1e-12), "
                        "double negation mismatches {}",
                        sphere, simplex, mismatches)};
}

}  // namespace

int main(int argc, char** argv) {
    const bool full = argc > 1 && std::string(argv[1]) == "--full";
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"codec totality", codec_totality},
        {"hypervolume oracle equivalence", hv_oracle},
        {"lazy greedy equals eager greedy", lazy_equals_eager},
        {"DTLZ2 standard-variant reproduction", dtlz2_reproduction},
        {"framework dominance", [full] { return framework_dominance(full); }},
        {"dynamic reference point schedule", epsilon_schedule_check},
        {"MOEA/D invariants", moead_invariants},
        {"Wilcoxon oracle", wilcoxon_oracle},
        {"tuner elitism and representability", tuner_checks},
        {"problem correctness", problem_correctness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
