#include <algorithm>
#include <cmath>
#include <limits>

#include "moead/experiments.hpp"
#include "moead/subset_selection.hpp"

namespace moead {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

bool wants(const ExperimentPlan& plan, Framework f) {
    return std::find(plan.frameworks.begin(), plan.frameworks.end(), f) != plan.frameworks.end();
}

bool wants(const ExperimentPlan& plan, Indicator i) {
    return std::find(plan.indicators.begin(), plan.indicators.end(), i) != plan.indicators.end();
}

std::vector<ObjectiveVector> pick(const std::vector<ObjectiveVector>& pts, const std::vector<std::size_t>& idx) {
    std::vector<ObjectiveVector> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(pts[i]);
    return out;
}

}  // namespace

ProblemContext prepare_problem(const ExperimentPlan& plan, const std::string& problem_name) {
    ProblemContext ctx;
    ctx.spec = parse_problem_name(problem_name);
    ctx.problem = make_problem(ctx.spec);

    std::optional<ReferenceSet> reference;
    if (const auto it = plan.reference_files.find(ctx.spec.name()); it != plan.reference_files.end()) {
        reference = load_reference_file(it->second, ctx.spec.num_objectives);
        ctx.frame = HvFrame::for_reference(*reference, plan.r);
    } else if (has_analytic_front(ctx.spec)) {
        ctx.frame = HvFrame::for_problem(ctx.spec, plan.r);
        if (wants(plan, Indicator::igd)) reference = sample_true_front(ctx.spec, plan.reference_points);
    } else {
        throw ContractError(ctx.spec.name() + " needs a reference front file (reference_files in the plan)");
    }
    if (wants(plan, Indicator::igd)) ctx.igd_reference = normalize_for_indicator(reference->points, ctx.frame);
    return ctx;
}

RunScores score_run(const RunResult& run, const ProblemContext& ctx, const ExperimentPlan& plan) {
    RunScores scores;
    for (auto& row : scores.values) row.fill(kMissing);
    const bool hv = wants(plan, Indicator::hv);
    const bool igd_on = wants(plan, Indicator::igd);
    const double r = ctx.frame.r;
    auto volume = [&](const std::vector<ObjectiveVector>& pts) {
        return plan.hv_box_fraction ? hypervolume_box_fraction(pts, r) : hypervolume(pts, r);
    };

    if (wants(plan, Framework::final_population)) {
        std::vector<ObjectiveVector> pop;
        for (const auto& s : run.final_population) pop.push_back(s.objectives);
        const auto norm = normalize_for_indicator(pop, ctx.frame);
        auto& row = scores.values[static_cast<std::size_t>(Framework::final_population)];
        if (hv) row[static_cast<std::size_t>(Indicator::hv)] = volume(norm);
        if (igd_on) row[static_cast<std::size_t>(Indicator::igd)] = igd(norm, ctx.igd_reference);
    }
    if (wants(plan, Framework::solution_selection)) {
        const auto all = run.archive.objectives();
        const auto nd = normalize_for_indicator(pick(all, nondominated_filter(all)), ctx.frame);
        auto& row = scores.values[static_cast<std::size_t>(Framework::solution_selection)];
        if (hv) {
            row[static_cast<std::size_t>(Indicator::hv)] =
                volume(pick(nd, greedy_hv_select(nd, plan.subset_size, r)));
        }
        if (igd_on) {
            row[static_cast<std::size_t>(Indicator::igd)] =
                igd(pick(nd, greedy_igd_select(nd, plan.subset_size, ctx.igd_reference)), ctx.igd_reference);
        }
    }
    return scores;
}

CellResult run_cell(const ExperimentPlan& plan, const ProblemContext& ctx, const VariantSpec& variant) {
    const auto seeds = plan.run_seeds();
    const MoeadConfig cfg = resolve_variant(variant, ctx.spec, plan.budget);
    std::vector<RunScores> runs(seeds.size());
    parallel_for(seeds.size(), plan.workers ? plan.workers : default_workers(), [&](std::size_t i) {
        runs[i] = score_run(run_moead(*ctx.problem, cfg, seeds[i]), ctx, plan);
    });

    CellResult cell;
    cell.problem = ctx.spec.name();
    cell.variant = variant.name;
    cell.seeds = seeds;
    for (std::size_t f = 0; f < 2; ++f) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (const auto& r : runs) {
                if (!std::isnan(r.values[f][i])) cell.values[f][i].push_back(r.values[f][i]);
            }
        }
    }
    return cell;
}

ExperimentResults run_plan(const ExperimentPlan& plan) {
    plan.validate();
    ExperimentResults results;
    results.problems = plan.problems;
    for (const auto& v : plan.variants) results.variants.push_back(v.name);
    results.seeds = plan.run_seeds();

    std::vector<ProblemContext> contexts;
    std::vector<std::vector<MoeadConfig>> configs;
    for (const auto& name : plan.problems) {
        contexts.push_back(prepare_problem(plan, name));
        auto& row = configs.emplace_back();
        for (const auto& v : plan.variants) row.push_back(resolve_variant(v, contexts.back().spec, plan.budget));
    }

    const std::size_t nv = plan.variants.size();
    const std::size_t ns = results.seeds.size();
    std::vector<RunScores> scores(plan.problems.size() * nv * ns);
    parallel_for(scores.size(), plan.workers ? plan.workers : default_workers(), [&](std::size_t item) {
        const std::size_t p = item / (nv * ns);
        const std::size_t v = (item / ns) % nv;
        const std::size_t s = item % ns;
        scores[item] = score_run(run_moead(*contexts[p].problem, configs[p][v], results.seeds[s]), contexts[p], plan);
    });

    for (std::size_t p = 0; p < plan.problems.size(); ++p) {
        for (std::size_t v = 0; v < nv; ++v) {
            CellResult cell;
            cell.problem = contexts[p].spec.name();
            cell.variant = plan.variants[v].name;
            cell.seeds = results.seeds;
            for (std::size_t s = 0; s < ns; ++s) {
                const auto& r = scores[(p * nv + v) * ns + s];
                for (std::size_t f = 0; f < 2; ++f) {
                    for (std::size_t i = 0; i < 2; ++i) {
                        if (!std::isnan(r.values[f][i])) cell.values[f][i].push_back(r.values[f][i]);
                    }
                }
            }
            results.cells.push_back(std::move(cell));
        }
    }
    return results;
}

std::vector<ObjectiveVector> empirical_front(const ProblemSpec& spec, std::size_t runs_per_variant,
                                             std::size_t budget, std::uint64_t seed, std::size_t workers) {
    const auto problem = make_problem(spec);
    const auto names = standard_variant_names();
    std::vector<std::vector<ObjectiveVector>> fronts(names.size() * runs_per_variant);
    parallel_for(fronts.size(), workers ? workers : default_workers(), [&](std::size_t item) {
        const auto cfg = standard_variant(names[item / runs_per_variant], budget);
        const auto run = run_moead(*problem, cfg, mix_seed(seed + item));
        const auto all = run.archive.objectives();
        fronts[item] = pick(all, nondominated_filter(all));
    });
    std::vector<ObjectiveVector> pool;
    for (auto& f : fronts) pool.insert(pool.end(), f.begin(), f.end());
    auto front = pick(pool, nondominated_filter(pool));
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    return front;
}

}  // namespace moead
