// Command-line front end: run, evaluate, select, tune, compare, front, decode.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "moead/experiments.hpp"
#include "moead/hyperheuristic.hpp"
#include "moead/indicators.hpp"
#include "moead/kernels.hpp"
#include "moead/subset_selection.hpp"

namespace fs = std::filesystem;
using namespace moead;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<Solution> read_dump(const fs::path& path, const Problem& problem) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_solutions(in, problem.num_variables(), problem.num_objectives());
}

std::vector<ObjectiveVector> objectives_of(const std::vector<Solution>& sols) {
    std::vector<ObjectiveVector> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(s.objectives);
    return out;
}

// Frame and reference set from either the analytic front or a reference file.
struct FrameSource {
    HvFrame frame;
    std::vector<ObjectiveVector> reference;
};

FrameSource frame_source(const ProblemSpec& spec, const std::string& reference_file, std::size_t reference_points,
                         bool need_reference) {
    FrameSource fs;
    if (!reference_file.empty()) {
        auto ref = load_reference_file(reference_file, spec.num_objectives);
        fs.frame = HvFrame::for_reference(ref);
        fs.reference = std::move(ref.points);
    } else {
        fs.frame = HvFrame::for_problem(spec);
        if (need_reference) fs.reference = sample_true_front(spec, reference_points).points;
    }
    return fs;
}

struct RunArgs {
    std::string problem;
    std::string config;
    std::string variant = "TCH";
    std::uint64_t seed = 1;
    std::size_t budget = 0;
    std::string out = "run_out";
};

int cmd_run(const RunArgs& a) {
    const auto spec = parse_problem_name(a.problem);
    const auto problem = make_problem(spec);
    MoeadConfig cfg = a.config.empty() ? standard_variant(a.variant) : load_config(a.config);
    if (a.budget) cfg.budget = a.budget;
    const auto result = run_moead(*problem, cfg, a.seed);

    fs::create_directories(a.out);
    {
        std::ofstream out(fs::path(a.out) / "archive.tsv");
        write_solutions(out, result.archive.entries());
    }
    {
        std::ofstream out(fs::path(a.out) / "population.tsv");
        write_solutions(out, result.final_population);
    }
    nlohmann::ordered_json meta;
    meta["problem"] = result.problem;
    meta["seed"] = result.seed;
    meta["num_variables"] = problem->num_variables();
    meta["num_objectives"] = problem->num_objectives();
    meta["evaluations"] = result.archive.size();
    meta["generations"] = result.generations;
    meta["kernels"] = kernels::isa_name(kernels::active_isa());
    meta["config"] = format_config(result.config);
    write_file(fs::path(a.out) / "run.json", meta.dump(2) + "\n");
    write_file(fs::path(a.out) / "config.txt", format_config(result.config));
    fmt::print("{}: {} evaluations, {} generations -> {}\n", result.problem, result.archive.size(),
               result.generations, a.out);
    return 0;
}

struct EvalArgs {
    std::string input;
    std::string problem;
    std::string reference;
    std::string indicator = "hv";
    std::size_t reference_points = 10000;
    bool nondominated = false;
    bool box_fraction = false;
};

int cmd_evaluate(const EvalArgs& a) {
    const auto spec = parse_problem_name(a.problem);
    const auto problem = make_problem(spec);
    auto pts = objectives_of(read_dump(a.input, *problem));
    if (a.nondominated) {
        std::vector<ObjectiveVector> nd;
        for (std::size_t i : nondominated_filter(pts)) nd.push_back(pts[i]);
        pts = std::move(nd);
    }
    const auto ind = parse_indicator(a.indicator);
    const auto src = frame_source(spec, a.reference, a.reference_points, ind == Indicator::igd);
    double v = 0.0;
    if (ind == Indicator::igd) {
        v = igd_in_frame(pts, src.reference, src.frame);
    } else {
        const auto norm = normalize_for_indicator(pts, src.frame);
        v = a.box_fraction ? hypervolume_box_fraction(norm, src.frame.r) : hypervolume(norm, src.frame.r);
    }
    fmt::print("{}\n", format_real(v));
    return 0;
}

struct SelectArgs {
    std::string input;
    std::string problem;
    std::string method = "greedy_hv";
    std::string reference;
    std::size_t k = 91;
    std::uint64_t seed = 1;
    std::size_t reference_points = 10000;
    std::string out;
};

int cmd_select(const SelectArgs& a) {
    const auto spec = parse_problem_name(a.problem);
    const auto problem = make_problem(spec);
    const auto sols = read_dump(a.input, *problem);
    const auto all = objectives_of(sols);
    const auto nd = nondominated_filter(all);
    std::vector<ObjectiveVector> cands;
    for (std::size_t i : nd) cands.push_back(all[i]);

    const auto method = parse_selection(a.method);
    const auto src = frame_source(spec, a.reference, a.reference_points, method == SelectionMethod::greedy_igd);
    RandomSource rng(a.seed);
    const auto picked = select_subset(method, cands, a.k, src.frame, &src.reference, rng);
    std::vector<Solution> chosen;
    for (std::size_t i : picked) chosen.push_back(sols[nd[i]]);
    if (a.out.empty()) {
        write_solutions(std::cout, chosen);
    } else {
        std::ofstream out(a.out);
        if (!out) throw IoError("cannot write " + a.out);
        write_solutions(out, chosen);
    }
    return 0;
}

struct TuneArgs {
    std::string problem;
    std::string framework = "fp";
    TunerConfig tuner;
    std::uint64_t seed = 1;
    std::string out = "tune_out";
};

int cmd_tune(TuneArgs a) {
    const auto spec = parse_problem_name(a.problem);
    const auto problem = make_problem(spec);
    a.tuner.framework = parse_framework(a.framework);
    const auto result = tune_moead(*problem, a.tuner, a.seed);

    fs::create_directories(a.out);
    write_file(fs::path(a.out) / "best_genome.txt", result.best.to_string() + "\n");
    write_file(fs::path(a.out) / "best_config.txt", format_config(result.best_config));
    write_file(fs::path(a.out) / "best_row.tsv", preset_header() + "\n" + preset_row(spec.name(), result.best_config) + "\n");
    std::string log = "generation,best_fitness,mean_fitness,new_configurations,best_genome";
    const std::size_t m = problem->num_objectives();
    for (std::size_t i = 0; i < m; ++i) log += fmt::format(",ideal_{}", i + 1);
    for (std::size_t i = 0; i < m; ++i) log += fmt::format(",nadir_{}", i + 1);
    log += '\n';
    for (const auto& g : result.log) {
        log += fmt::format("{},{},{},{},{}", g.generation, format_real(g.best_fitness), format_real(g.mean_fitness),
                           g.new_configurations, g.best.to_string());
        for (double v : g.frame_ideal) log += "," + format_real(v);
        for (double v : g.frame_nadir) log += "," + format_real(v);
        log += '\n';
    }
    write_file(fs::path(a.out) / "log.csv", log);
    fmt::print("best fitness {:.6f}\n{}\n{}\n", result.best_fitness, result.best.to_string(),
               preset_row(spec.name(), result.best_config));
    return 0;
}

int cmd_compare(const std::string& plan_path, const std::string& out_dir, std::size_t workers) {
    auto plan = load_plan(plan_path);
    if (workers) plan.workers = workers;
    const auto results = run_plan(plan);
    const fs::path out(out_dir);
    fs::create_directories(out / "cells");

    for (const auto& cell : results.cells) {
        std::string csv = "framework,indicator,run,seed,value\n";
        for (auto f : plan.frameworks) {
            for (auto i : plan.indicators) {
                const auto& v = cell.at(f, i);
                for (std::size_t r = 0; r < v.size(); ++r) {
                    csv += fmt::format("{},{},{},{},{}\n", framework_name(f), indicator_name(i), r + 1, cell.seeds[r],
                                       format_real(v[r]));
                }
            }
        }
        std::string name = cell.problem + "__" + cell.variant + ".csv";
        for (auto& ch : name) {
            if (ch == '/') ch = '_';
        }
        write_file(out / "cells" / name, csv);
    }

    nlohmann::ordered_json summary;
    summary["seeds"] = results.seeds;
    summary["tables"] = nlohmann::ordered_json::array();
    std::string rendered;
    for (auto f : plan.frameworks) {
        for (auto i : plan.indicators) {
            const auto table = emit_table(results, f, i, plan.baseline_name());
            const std::string stem = fmt::format("{}_{}", framework_name(f), indicator_name(i));
            rendered += table.render() + "\n";
            write_file(out / ("raw_" + stem + ".csv"), table.raw_csv(results));
            summary["tables"].push_back(nlohmann::ordered_json::parse(table.summary_json()));
        }
    }
    write_file(out / "table.txt", rendered);
    write_file(out / "summary.json", summary.dump(2) + "\n");
    fmt::print("{}", rendered);
    return 0;
}

int cmd_front(const std::string& problem_name, std::size_t count, bool empirical, std::size_t runs,
              std::size_t budget, std::uint64_t seed, const std::string& out) {
    const auto spec = parse_problem_name(problem_name);
    std::vector<ObjectiveVector> pts;
    if (empirical || !has_analytic_front(spec)) {
        pts = empirical_front(spec, runs, budget, seed);
    } else {
        pts = sample_true_front(spec, count).points;
    }
    if (out.empty()) {
        write_real_rows(std::cout, pts);
    } else {
        std::ofstream f(out);
        if (!f) throw IoError("cannot write " + out);
        write_real_rows(f, pts);
        fmt::print(stderr, "{} points -> {}\n", pts.size(), out);
    }
    return 0;
}

int cmd_decode(const std::string& bits) {
    const auto genome = ConfigGenome::from_string(bits);
    const auto cfg = decode_genome(genome);
    fmt::print("{}\n{}\n{}", preset_header(), preset_row("genome", cfg), format_config(cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MOEA/D toolkit: runs, indicators, subset selection, configuration tuning"};
    app.require_subcommand(1);

    RunArgs run;
    auto* c_run = app.add_subcommand("run", "Run MOEA/D once and dump archive, population and metadata");
    c_run->add_option("-p,--problem", run.problem, "Problem name, e.g. dtlz2 or minus-wfg4")->required();
    c_run->add_option("-c,--config", run.config, "Configuration file (key = value)");
    c_run->add_option("--variant", run.variant, "Standard variant when no config is given (WS, TCH, MTCH, PBI, IPBI)");
    c_run->add_option("-s,--seed", run.seed, "Seed");
    c_run->add_option("-b,--budget", run.budget, "Evaluation budget override");
    c_run->add_option("-o,--out", run.out, "Output directory");

    EvalArgs ev;
    auto* c_eval = app.add_subcommand("evaluate", "Hypervolume or IGD of a solution dump");
    c_eval->add_option("-i,--input", ev.input, "Archive or population dump")->required();
    c_eval->add_option("-p,--problem", ev.problem, "Problem name")->required();
    c_eval->add_option("-r,--reference", ev.reference, "Reference front file; default is the analytic front");
    c_eval->add_option("--indicator", ev.indicator, "hv or igd");
    c_eval->add_option("--reference-points", ev.reference_points, "Analytic IGD sample size");
    c_eval->add_flag("--nondominated", ev.nondominated, "Score only the non-dominated entries");
    c_eval->add_flag("--box-fraction", ev.box_fraction, "Report HV divided by the reference box volume r^M");

    SelectArgs sel;
    auto* c_sel = app.add_subcommand("select", "Select a subset of an archive's non-dominated solutions");
    c_sel->add_option("-i,--input", sel.input, "Archive dump")->required();
    c_sel->add_option("-p,--problem", sel.problem, "Problem name")->required();
    c_sel->add_option("-m,--method", sel.method, "distance, greedy_hv or greedy_igd");
    c_sel->add_option("-k", sel.k, "Subset size");
    c_sel->add_option("-r,--reference", sel.reference, "Reference front file");
    c_sel->add_option("-s,--seed", sel.seed, "Seed for distance-based selection");
    c_sel->add_option("--reference-points", sel.reference_points, "Analytic IGD sample size");
    c_sel->add_option("-o,--out", sel.out, "Output dump (default stdout)");

    TuneArgs tune;
    auto* c_tune = app.add_subcommand("tune", "Genetic search over MOEA/D configurations");
    c_tune->add_option("-p,--problem", tune.problem, "Problem name")->required();
    c_tune->add_option("-f,--framework", tune.framework, "fp (final population) or ss (solution selection)");
    c_tune->add_option("--mu", tune.tuner.mu, "GA population size");
    c_tune->add_option("--generations", tune.tuner.generations, "GA generations");
    c_tune->add_option("--runs", tune.tuner.runs, "MOEA/D runs per fitness evaluation");
    c_tune->add_option("--budget", tune.tuner.inner_budget, "Evaluations per MOEA/D run");
    c_tune->add_option("--workers", tune.tuner.workers, "Worker threads (0 = MOEAD_WORKERS or all cores)");
    c_tune->add_option("-s,--seed", tune.seed, "Master seed");
    c_tune->add_option("-o,--out", tune.out, "Output directory");

    std::string plan_path;
    std::string compare_out = "compare_out";
    std::size_t compare_workers = 0;
    auto* c_cmp = app.add_subcommand("compare", "Run an experiment plan and emit tables");
    c_cmp->add_option("plan", plan_path, "Plan file (JSON)")->required();
    c_cmp->add_option("-o,--out", compare_out, "Output directory");
    c_cmp->add_option("--workers", compare_workers, "Worker threads");

    std::string front_problem;
    std::string front_out;
    std::size_t front_count = 10000;
    bool front_empirical = false;
    std::size_t front_runs = 5;
    std::size_t front_budget = 50000;
    std::uint64_t front_seed = 1;
    auto* c_front = app.add_subcommand("front", "Write a reference front (analytic sample or empirical union)");
    c_front->add_option("-p,--problem", front_problem, "Problem name")->required();
    c_front->add_option("-n,--count", front_count, "Analytic sample size");
    c_front->add_flag("--empirical", front_empirical, "Build from long runs of the standard variants");
    c_front->add_option("--runs", front_runs, "Runs per standard variant for the empirical front");
    c_front->add_option("--budget", front_budget, "Evaluations per run for the empirical front");
    c_front->add_option("-s,--seed", front_seed, "Seed");
    c_front->add_option("-o,--out", front_out, "Output file (default stdout)");

    std::string genome_bits;
    auto* c_dec = app.add_subcommand("decode", "Decode a 53-bit genome into a configuration");
    c_dec->add_option("genome", genome_bits, "Bit string")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_run) return cmd_run(run);
        if (*c_eval) return cmd_evaluate(ev);
        if (*c_sel) return cmd_select(sel);
        if (*c_tune) return cmd_tune(tune);
        if (*c_cmp) return cmd_compare(plan_path, compare_out, compare_workers);
        if (*c_front) return cmd_front(front_problem, front_count, front_empirical, front_runs, front_budget,
                                       front_seed, front_out);
        if (*c_dec) return cmd_decode(genome_bits);
    } catch (const ParseError& e) {
        fmt::print(stderr, "parse error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
