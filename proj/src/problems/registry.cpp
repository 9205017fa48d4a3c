#include <algorithm>
#include <array>
#include <cctype>

#include "internal.hpp"

namespace moead {

namespace {

constexpr std::array<std::string_view, 13> kFamilyNames = {"dtlz1", "dtlz2", "dtlz3", "dtlz4", "wfg1",
                                                           "wfg2",  "wfg3",  "wfg4",  "wfg5",  "wfg6",
                                                           "wfg7",  "wfg8",  "wfg9"};
constexpr std::string_view kMinusPrefix = "minus-";

class BenchmarkProblem final : public Problem {
public:
    explicit BenchmarkProblem(const ProblemSpec& spec) : spec_(spec), name_(spec.name()) {
        const std::size_t d = spec.num_variables();
        lower_.assign(d, 0.0);
        upper_.resize(d);
        for (std::size_t i = 0; i < d; ++i) upper_[i] = spec.is_wfg() ? 2.0 * static_cast<double>(i + 1) : 1.0;
    }

    std::string name() const override { return name_; }
    std::size_t num_objectives() const override { return spec_.num_objectives; }
    std::size_t num_variables() const override { return lower_.size(); }
    std::span<const double> lower_bounds() const override { return lower_; }
    std::span<const double> upper_bounds() const override { return upper_; }

    void evaluate_unchecked(std::span<const double> x, std::span<double> out) const override {
        if (spec_.is_wfg()) {
            detail::evaluate_wfg(spec_.family, spec_.num_objectives, spec_.position_params(), spec_.distance_params(),
                                 x, out);
        } else {
            detail::evaluate_dtlz(spec_.family, spec_.num_objectives, spec_.distance_params(), x, out);
        }
    }

private:
    ProblemSpec spec_;
    std::string name_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

class NegatedProblem final : public Problem {
public:
    NegatedProblem(ProblemHandle base, std::string name) : base_(std::move(base)), name_(std::move(name)) {}

    std::string name() const override { return name_; }
    std::size_t num_objectives() const override { return base_->num_objectives(); }
    std::size_t num_variables() const override { return base_->num_variables(); }
    std::span<const double> lower_bounds() const override { return base_->lower_bounds(); }
    std::span<const double> upper_bounds() const override { return base_->upper_bounds(); }

    void evaluate_unchecked(std::span<const double> x, std::span<double> out) const override {
        base_->evaluate_unchecked(x, out);
        for (auto& v : out) v = -v;
    }

private:
    ProblemHandle base_;
    std::string name_;
};

}  // namespace

std::size_t ProblemSpec::position_params() const {
    if (is_wfg()) return k != 0 ? k : 2 * (num_objectives - 1);
    return num_objectives - 1;
}

std::size_t ProblemSpec::distance_params() const {
    if (is_wfg()) return l != 0 ? l : 20;
    if (k != 0) return k;
    return family == Family::dtlz1 ? 5 : 10;
}

std::size_t ProblemSpec::num_variables() const { return position_params() + distance_params(); }

std::string ProblemSpec::name() const {
    std::string base(kFamilyNames[static_cast<std::size_t>(family)]);
    return minus ? std::string(kMinusPrefix) + base : base;
}

ProblemSpec parse_problem_name(std::string_view name, std::size_t num_objectives) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    ProblemSpec spec;
    spec.num_objectives = num_objectives;
    std::string_view rest = lower;
    if (rest.starts_with(kMinusPrefix)) {
        spec.minus = true;
        rest.remove_prefix(kMinusPrefix.size());
    }
    const auto it = std::find(kFamilyNames.begin(), kFamilyNames.end(), rest);
    if (it == kFamilyNames.end()) throw ContractError("unknown problem name: " + std::string(name));
    spec.family = static_cast<Family>(it - kFamilyNames.begin());
    return spec;
}

std::vector<ProblemSpec> standard_problem_suite() {
    std::vector<ProblemSpec> out;
    for (bool minus : {false, true}) {
        for (std::size_t f = 0; f < kFamilyNames.size(); ++f) {
            ProblemSpec s;
            s.family = static_cast<Family>(f);
            s.minus = minus;
            out.push_back(s);
        }
    }
    return out;
}

ProblemHandle make_problem(const ProblemSpec& spec) {
    if (spec.num_objectives < 2) throw ContractError("problems need at least two objectives");
    if (spec.is_wfg()) {
        const std::size_t kp = spec.position_params();
        if (kp == 0 || kp % (spec.num_objectives - 1) != 0) {
            throw ContractError("WFG position parameter count must be a positive multiple of M-1");
        }
        if (spec.distance_params() == 0) throw ContractError("WFG needs distance parameters");
        if ((spec.family == Family::wfg2 || spec.family == Family::wfg3) && spec.distance_params() % 2 != 0) {
            throw ContractError("WFG2/WFG3 need an even number of distance parameters");
        }
    } else if (spec.distance_params() == 0) {
        throw ContractError("DTLZ needs distance variables");
    }
    ProblemSpec base = spec;
    base.minus = false;
    ProblemHandle handle = std::make_shared<const BenchmarkProblem>(base);
    return spec.minus ? negate(handle) : handle;
}

ProblemHandle negate(ProblemHandle base) {
    std::string name = base->name();
    name = name.starts_with(kMinusPrefix) ? name.substr(kMinusPrefix.size()) : std::string(kMinusPrefix) + name;
    return std::make_shared<const NegatedProblem>(std::move(base), std::move(name));
}

ObjectiveVector evaluate_problem(const ProblemSpec& spec, std::span<const double> x) {
    return make_problem(spec)->evaluate(x);
}

}  // namespace moead
