#include <algorithm>
#include <cmath>

#include "moead/moead.hpp"

namespace moead {

std::size_t max_generation(const MoeadConfig& config) {
    if (config.population == 0) throw ContractError("population must be positive");
    return std::max<std::size_t>(1, config.budget / config.population);
}

namespace {

class Engine {
public:
    Engine(const Problem& problem, const MoeadConfig& config, std::uint64_t seed, const RunObserver* observer)
        : problem_(problem),
          config_(config),
          observer_(observer),
          m_(problem.num_objectives()),
          rng_(seed),
          ref_(problem.num_objectives(), config.eps_ini, config.eps_end, max_generation(config)),
          fn_(m_),
          z_star_(m_),
          z_nad_norm_(m_),
          scale_(m_) {
        config_.validate();
        const auto h = divisions_for_population(m_, config_.population);
        if (!h) {
            throw ContractError("population " + std::to_string(config_.population) +
                                " is not a simplex-lattice size for " + std::to_string(m_) + " objectives");
        }
        lattice_ = das_dennis(m_, *h);
        mating_ = build_neighborhoods(lattice_, config_.mating);
        replacement_ = build_neighborhoods(lattice_, config_.replacement);
    }

    RunResult run() {
        RunResult result;
        result.config = config_;
        result.seed = rng_.seed();
        result.problem = problem_.name();
        archive_.reserve(config_.budget);

        const auto lo = problem_.lower_bounds();
        const auto hi = problem_.upper_bounds();
        const std::size_t n = config_.population;
        population_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            DecisionVector x(lo.size());
            for (std::size_t d = 0; d < x.size(); ++d) x[d] = rng_.uniform(lo[d], hi[d]);
            population_.push_back(evaluate(std::move(x)));
        }
        z_nad_ = population_nadir(population_);

        const Bounds bounds{lo, hi};
        std::size_t t = 0;
        while (archive_.size() < config_.budget) {
            ++t;
            ref_.generation = std::min(t, ref_.max_generation);
            epsilon_ = epsilon_schedule(ref_).front();
            for (std::size_t j = 0; j < n && archive_.size() < config_.budget; ++j) {
                const auto& pool = mating_[j];
                const std::size_t a = rng_.index(pool.size());
                std::size_t b = rng_.index(pool.size() - 1);
                if (b >= a) ++b;
                Solution child = evaluate(vary(config_.variation, population_[pool[a]].decision,
                                               population_[pool[b]].decision, bounds, rng_));
                update_neighbors(j, child, t);
            }
        }

        result.generations = t;
        result.final_population = std::move(population_);
        result.archive = std::move(archive_);
        return result;
    }

private:
    Solution evaluate(DecisionVector x) {
        Solution s;
        s.objectives.assign(m_, 0.0);
        problem_.evaluate_unchecked(x, s.objectives);
        for (double v : s.objectives) {
            if (!std::isfinite(v)) {
                throw NumericError(problem_.name() + ": non-finite objective at evaluation " +
                                   std::to_string(archive_.size()));
            }
        }
        s.decision = std::move(x);
        s.eval_index = archive_.size();
        ref_.observe(s.objectives);
        archive_.record(s);
        return s;
    }

    // Anchors for the current z_min, z_nad and epsilon.
    void refresh_anchors() {
        const auto& z_min = ref_.z_min;
        for (std::size_t i = 0; i < m_; ++i) {
            if (config_.normalize) {
                scale_[i] = z_nad_[i] - z_min[i] + config_.eps_norm;
                z_star_[i] = -epsilon_;
                z_nad_norm_[i] = (z_nad_[i] - z_min[i]) / scale_[i];
            } else {
                z_star_[i] = z_min[i] - epsilon_;
                z_nad_norm_[i] = z_nad_[i];
            }
        }
    }

    double value(const ObjectiveVector& f, std::size_t k) {
        if (config_.normalize) {
            for (std::size_t i = 0; i < m_; ++i) fn_[i] = (f[i] - ref_.z_min[i]) / scale_[i];
            return scalarize(config_.scalarizer, fn_, lattice_.vectors[k], z_star_, z_nad_norm_);
        }
        return scalarize(config_.scalarizer, f, lattice_.vectors[k], z_star_, z_nad_norm_);
    }

    void update_neighbors(std::size_t j, const Solution& child, std::size_t generation) {
        refresh_anchors();
        for (std::size_t k : replacement_[j]) {
            const double candidate = value(child.objectives, k);
            const double incumbent = value(population_[k].objectives, k);
            if (!strictly_better(config_.scalarizer.kind, candidate, incumbent)) continue;
            if (observer_ && observer_->on_replacement) {
                observer_->on_replacement(ReplacementEvent{generation, k, population_[k], child, lattice_.vectors[k],
                                                           ref_.z_min, z_nad_, epsilon_});
            }
            population_[k] = child;
            z_nad_ = population_nadir(population_);
            refresh_anchors();
        }
    }

    const Problem& problem_;
    MoeadConfig config_;
    const RunObserver* observer_;
    std::size_t m_;
    RandomSource rng_;
    ReferencePointState ref_;
    WeightLattice lattice_;
    std::vector<std::vector<std::size_t>> mating_;
    std::vector<std::vector<std::size_t>> replacement_;
    Archive archive_;
    std::vector<Solution> population_;
    ObjectiveVector z_nad_;
    double epsilon_ = 0.0;
    ObjectiveVector fn_, z_star_, z_nad_norm_, scale_;
};

}  // namespace

RunResult run_moead(const Problem& problem, const MoeadConfig& config, std::uint64_t seed,
                    const RunObserver* observer) {
    return Engine(problem, config, seed, observer).run();
}

}  // namespace moead
