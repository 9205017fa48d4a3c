#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moead/hyperheuristic.hpp"
#include "moead/indicators.hpp"
#include "moead/moead.hpp"
#include "moead/problems.hpp"

namespace moead {

/// The five standard MOEA/D versions: N = 91, neighborhoods of 20, SBX (p_c = 1,
/// eta 20), polynomial mutation (p_m = 1/D, eta 20), zero epsilon schedule,
/// theta 5 for PBI and 0.1 for IPBI. Accepts "TCH" or "MOEA/D-TCH".
MoeadConfig standard_variant(std::string_view name, std::size_t budget = 10000);
std::vector<std::string> standard_variant_names();

/// Per-problem configurations read from a tab-separated preset file. Values
/// are snapped to the nearest genome-representable configuration.
struct PresetTable {
    std::map<std::string, MoeadConfig> by_problem;

    const MoeadConfig& at(const std::string& problem) const;
};

PresetTable parse_presets(std::istream& in, std::size_t budget = 10000);
PresetTable load_presets(const std::filesystem::path& path, std::size_t budget = 10000);
/// Header and one row in the preset file layout (the inverse of parse_presets).
std::string preset_header();
std::string preset_row(const std::string& problem, const MoeadConfig& config);

/// Bundled presets: "auto_fp" or "auto_ss".
std::filesystem::path bundled_preset_path(std::string_view name);

enum class Indicator { hv, igd };
std::string_view indicator_name(Indicator i);
Indicator parse_indicator(std::string_view name);

struct VariantSpec {
    enum class Kind { standard, preset, config_file };

    std::string name;
    Kind kind = Kind::standard;
    /// Scalarizer name, preset name/path, or configuration path.
    std::string source;
};

struct ExperimentPlan {
    std::vector<std::string> problems;
    std::vector<VariantSpec> variants;
    std::size_t runs = 31;
    /// Empty means 1..runs.
    std::vector<std::uint64_t> seeds;
    std::size_t budget = 10000;
    std::vector<Framework> frameworks = {Framework::final_population, Framework::solution_selection};
    std::vector<Indicator> indicators = {Indicator::hv};
    /// Column that significance marks are measured against; empty means the first variant.
    std::string baseline;
    std::map<std::string, std::string> reference_files;
    std::size_t subset_size = 91;
    std::size_t reference_points = 10000;
    double r = 1.1;
    /// Report HV as a fraction of the reference box [0, r]^M rather than as raw volume.
    bool hv_box_fraction = true;
    std::size_t workers = 0;

    std::vector<std::uint64_t> run_seeds() const;
    const std::string& baseline_name() const;
    void validate() const;
};

/// JSON plan; see README for the schema.
ExperimentPlan parse_plan(const std::string& json_text, const std::filesystem::path& base_dir = {});
ExperimentPlan load_plan(const std::filesystem::path& path);

/// Problem-level evaluation context: instance, normalization frame, and the
/// normalized IGD reference set when IGD is requested.
struct ProblemContext {
    ProblemSpec spec;
    ProblemHandle problem;
    HvFrame frame;
    std::vector<ObjectiveVector> igd_reference;
};

ProblemContext prepare_problem(const ExperimentPlan& plan, const std::string& problem_name);

/// Configuration a variant uses on a problem.
MoeadConfig resolve_variant(const VariantSpec& variant, const ProblemSpec& spec, std::size_t budget);

struct RunScores {
    /// [framework][indicator]; NaN where not requested.
    std::array<std::array<double, 2>, 2> values{};
};

/// Scores one run under both frameworks from a single execution.
RunScores score_run(const RunResult& run, const ProblemContext& ctx, const ExperimentPlan& plan);

struct CellResult {
    std::string problem;
    std::string variant;
    std::vector<std::uint64_t> seeds;
    /// [framework][indicator] -> per-run values in seed order.
    std::array<std::array<std::vector<double>, 2>, 2> values;

    const std::vector<double>& at(Framework f, Indicator i) const {
        return values[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)];
    }
    std::vector<double>& at(Framework f, Indicator i) {
        return values[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)];
    }
};

CellResult run_cell(const ExperimentPlan& plan, const ProblemContext& ctx, const VariantSpec& variant);

struct ExperimentResults {
    std::vector<std::string> problems;
    std::vector<std::string> variants;
    std::vector<std::uint64_t> seeds;
    /// Row-major: problems x variants.
    std::vector<CellResult> cells;

    const CellResult& cell(std::size_t problem, std::size_t variant) const {
        return cells[problem * variants.size() + variant];
    }
};

/// Every (problem, variant, seed) run once, in parallel; deterministic.
ExperimentResults run_plan(const ExperimentPlan& plan);

enum class Orientation { maximize, minimize };
enum class Outcome { better, worse, equivalent };

std::string_view outcome_mark(Outcome o);

struct RankSumResult {
    double u = 0.0;  ///< Mann-Whitney U of the first sample
    double z = 0.0;
    double p_value = 1.0;
    Outcome outcome = Outcome::equivalent;  ///< Of `a` relative to `b`
};

/// Two-sided rank-sum test with mid-ranks, tie-corrected normal approximation
/// and continuity correction. Significant differences are oriented by the
/// medians (mean ranks when medians coincide).
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, Orientation orientation,
                                double alpha = 0.05);

double median(std::vector<double> v);
double mean(std::span<const double> v);

struct MarkCounts {
    std::size_t better = 0;
    std::size_t worse = 0;
    std::size_t equivalent = 0;
};

struct Table {
    Framework framework;
    Indicator indicator;
    std::string baseline;
    std::vector<std::string> problems;
    std::vector<std::string> variants;
    std::vector<std::vector<double>> means;      ///< [problem][variant]
    std::vector<std::vector<Outcome>> marks;     ///< vs. baseline; baseline column equivalent
    std::vector<std::size_t> best, worst;        ///< per problem, variant index
    std::vector<MarkCounts> counts;              ///< per variant

    std::string render() const;
    /// problem,variant,framework,indicator,run,seed,value
    std::string raw_csv(const ExperimentResults& results) const;
    std::string summary_json() const;
};

Table emit_table(const ExperimentResults& results, Framework framework, Indicator indicator,
                 const std::string& baseline);

/// Non-dominated union of the archives of several standard-variant runs; an
/// empirical reference front for problems without an analytic sampler.
std::vector<ObjectiveVector> empirical_front(const ProblemSpec& spec, std::size_t runs_per_variant,
                                             std::size_t budget, std::uint64_t seed, std::size_t workers = 0);

}  // namespace moead
