#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moead {

/// Raised when a caller breaks a documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised for unreadable files and I/O failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed text input. `line()` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an objective evaluates to NaN or infinity.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ObjectiveVector = std::vector<double>;
using DecisionVector = std::vector<double>;

struct Solution {
    DecisionVector decision;
    ObjectiveVector objectives;
    std::uint64_t eval_index = 0;

    bool operator==(const Solution&) const = default;
};

/// Append-only record of every evaluated solution of one run.
class Archive {
public:
    Archive() = default;

    void record(Solution s);
    void reserve(std::size_t n) { entries_.reserve(n); }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const Solution& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Solution> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Objective vectors of all entries, in evaluation order.
    std::vector<ObjectiveVector> objectives() const;

    bool operator==(const Archive&) const = default;

private:
    std::vector<Solution> entries_;
};

/// Box-constrained multi-objective minimization problem. Implementations are
/// immutable and safe to share across threads.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::string name() const = 0;
    virtual std::size_t num_objectives() const = 0;
    virtual std::size_t num_variables() const = 0;
    virtual std::span<const double> lower_bounds() const = 0;
    virtual std::span<const double> upper_bounds() const = 0;

    /// Writes f(x) into `out`. `x` is assumed in bounds; use evaluate() for checked access.
    virtual void evaluate_unchecked(std::span<const double> x, std::span<double> out) const = 0;

    /// Checked evaluation: bounds and arity are contract conditions, non-finite
    /// objectives raise NumericError.
    ObjectiveVector evaluate(std::span<const double> x) const;
};

using ProblemHandle = std::shared_ptr<const Problem>;

/// Seeded pseudo-random stream. Identical seeds give identical draw sequences;
/// substream(i) derives an independent stream for parallel work item i.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer on [0, n).
    std::size_t index(std::size_t n);
    bool bernoulli(double p) { return uniform() < p; }
    /// Standard normal deviate (Box-Muller, one value per call).
    double normal();

    RandomSource substream(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// True iff `a` Pareto-dominates `b` (minimization).
bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of the points not dominated by any other point, ascending.
/// Duplicates are mutually non-dominated and all retained.
std::vector<std::size_t> nondominated_filter(const std::vector<ObjectiveVector>& points);

/// Tab-separated dump, one solution per line: eval_index, decision values,
/// objective values. Reals use their shortest round-trip form.
void write_solutions(std::ostream& out, std::span<const Solution> solutions);
std::vector<Solution> read_solutions(std::istream& in, std::size_t num_variables,
                                     std::size_t num_objectives);

/// Whitespace-separated rows of reals. With expected_columns == 0 the arity is
/// taken from the first row. Rejects ragged rows, reporting the line number.
std::vector<ObjectiveVector> read_real_rows(std::istream& in, std::size_t expected_columns = 0);
void write_real_rows(std::ostream& out, const std::vector<ObjectiveVector>& rows);

std::string format_real(double v);

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Results must be
/// written to slots indexed by i so the outcome is independent of scheduling.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

/// Worker count from MOEAD_WORKERS, defaulting to hardware concurrency.
std::size_t default_workers();

}  // namespace moead
