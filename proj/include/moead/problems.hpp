#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moead/core.hpp"

namespace moead {

enum class Family { dtlz1, dtlz2, dtlz3, dtlz4, wfg1, wfg2, wfg3, wfg4, wfg5, wfg6, wfg7, wfg8, wfg9 };

/// Benchmark instance. Zero-valued k / l select the suite defaults:
/// DTLZ1 k = 5, DTLZ2-4 k = 10, WFG k = 2(M-1) position and l = 20 distance variables.
struct ProblemSpec {
    Family family = Family::dtlz2;
    bool minus = false;
    std::size_t num_objectives = 3;
    std::size_t k = 0;
    std::size_t l = 0;

    bool is_wfg() const noexcept { return family >= Family::wfg1; }
    std::size_t position_params() const;
    std::size_t distance_params() const;
    std::size_t num_variables() const;
    std::string name() const;

    bool operator==(const ProblemSpec&) const = default;
};

/// Parses canonical names: dtlz1..dtlz4, wfg1..wfg9, optional "minus-" prefix.
ProblemSpec parse_problem_name(std::string_view name, std::size_t num_objectives = 3);

/// The 26 three-objective instances in canonical order: DTLZ1-4, WFG1-9, then their minus versions.
std::vector<ProblemSpec> standard_problem_suite();

ProblemHandle make_problem(const ProblemSpec& spec);

/// Wraps a problem so that every objective is negated.
ProblemHandle negate(ProblemHandle base);

/// Checked evaluation of a freshly built instance. Prefer make_problem() in loops.
ObjectiveVector evaluate_problem(const ProblemSpec& spec, std::span<const double> x);

struct ReferenceSet {
    enum class Source { analytic, file };

    std::vector<ObjectiveVector> points;
    Source source = Source::analytic;

    std::size_t num_objectives() const { return points.empty() ? 0 : points.front().size(); }
};

bool has_analytic_front(const ProblemSpec& spec);

/// About `count` well-spread points on the Pareto front; deterministic.
/// WFG3 has no analytic sampler (its front has a degenerate flag region) and
/// must be supplied through load_reference_file().
ReferenceSet sample_true_front(const ProblemSpec& spec, std::size_t count);

/// Objective rows, whitespace separated. `num_objectives` == 0 accepts the first row's arity.
ReferenceSet load_reference_file(const std::filesystem::path& path, std::size_t num_objectives = 0);

/// Componentwise minimum and maximum of the true front (analytic problems only).
std::pair<ObjectiveVector, ObjectiveVector> ideal_nadir(const ProblemSpec& spec);
std::pair<ObjectiveVector, ObjectiveVector> ideal_nadir(const ReferenceSet& reference);

/// Maximum of (y^2 - cos(20 pi y)) over y in [-0.5, 0.5]; the per-variable
/// worst case of the DTLZ1/DTLZ3 distance function.
double rastrigin_term_max();

}  // namespace moead
