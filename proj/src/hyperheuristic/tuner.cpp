#include <algorithm>
#include <map>
#include <numeric>

#include "moead/hyperheuristic.hpp"
#include "moead/subset_selection.hpp"

namespace moead {

namespace {

constexpr std::uint64_t kSelectionStream = 0x5e1ec7;

std::vector<ObjectiveVector> scored_set(const RunResult& run, Framework framework, std::size_t subset_size,
                                        std::uint64_t seed) {
    std::vector<ObjectiveVector> out;
    if (framework == Framework::final_population) {
        for (const auto& s : run.final_population) out.push_back(s.objectives);
        return out;
    }
    const auto all = run.archive.objectives();
    std::vector<ObjectiveVector> nd;
    for (std::size_t i : nondominated_filter(all)) nd.push_back(all[i]);
    RandomSource rng = RandomSource(seed).substream(kSelectionStream);
    for (std::size_t i : distance_based_select(nd, subset_size, rng)) out.push_back(nd[i]);
    return out;
}

}  // namespace

ScoredRuns score_runs(const MoeadConfig& config, const Problem& problem, Framework framework,
                      std::span<const std::uint64_t> seeds, std::size_t subset_size) {
    ScoredRuns out;
    out.sets.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
        out.sets.push_back(scored_set(run_moead(problem, config, seed), framework, subset_size, seed));
    }
    return out;
}

double fitness_from_runs(const ScoredRuns& runs, const HvFrame& frame) {
    if (runs.sets.empty()) throw ContractError("fitness_from_runs: no runs");
    double sum = 0.0;
    for (const auto& set : runs.sets) sum += hypervolume_in_frame(set, frame);
    return sum / static_cast<double>(runs.sets.size());
}

double evaluate_config(const MoeadConfig& config, const Problem& problem, Framework framework,
                       std::span<const std::uint64_t> seeds, const HvFrame& frame) {
    if (frame.num_objectives() != problem.num_objectives()) {
        throw ContractError("evaluate_config: frame and problem differ in objective count");
    }
    return fitness_from_runs(score_runs(config, problem, framework, seeds), frame);
}

HvFrame frame_from_sets(const std::vector<const ScoredRuns*>& runs, double r) {
    std::vector<ObjectiveVector> pool;
    for (const auto* rs : runs) {
        for (const auto& set : rs->sets) pool.insert(pool.end(), set.begin(), set.end());
    }
    if (pool.empty()) throw ContractError("frame_from_sets: no points");
    const auto nd = nondominated_filter(pool);
    HvFrame frame;
    frame.r = r;
    frame.ideal = pool[nd.front()];
    frame.nadir = pool[nd.front()];
    for (std::size_t i : nd) {
        for (std::size_t m = 0; m < frame.ideal.size(); ++m) {
            frame.ideal[m] = std::min(frame.ideal[m], pool[i][m]);
            frame.nadir[m] = std::max(frame.nadir[m], pool[i][m]);
        }
    }
    for (std::size_t m = 0; m < frame.ideal.size(); ++m) {
        if (!(frame.nadir[m] > frame.ideal[m])) frame.nadir[m] = frame.ideal[m] + 1.0;
    }
    return frame;
}

void TunerConfig::validate() const {
    if (mu < 2) throw ContractError("tuner: mu must be at least 2");
    if (tournament < 1) throw ContractError("tuner: tournament size must be positive");
    if (runs < 1) throw ContractError("tuner: runs must be positive");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) throw ContractError("tuner: crossover_prob outside [0, 1]");
    if (!(bitflip_prob >= 0.0 && bitflip_prob <= 1.0)) throw ContractError("tuner: bitflip_prob outside [0, 1]");
    if (inner_budget < population) throw ContractError("tuner: inner budget below population size");
    if (subset_size < 1) throw ContractError("tuner: subset size must be positive");
}

std::vector<std::uint64_t> campaign_seeds(std::uint64_t master_seed, std::size_t runs) {
    std::vector<std::uint64_t> seeds(runs);
    for (std::size_t i = 0; i < runs; ++i) seeds[i] = mix_seed(master_seed ^ mix_seed(0xC0FFEE + i));
    return seeds;
}

namespace {

class Campaign {
public:
    Campaign(const Problem& problem, const TunerConfig& tuner, std::uint64_t master_seed)
        : problem_(problem),
          tuner_(tuner),
          rng_(RandomSource(master_seed).substream(1)),
          seeds_(campaign_seeds(master_seed, tuner.runs)),
          workers_(tuner.workers ? tuner.workers : default_workers()) {
        tuner_.validate();
    }

    TuneResult run() {
        std::vector<ConfigGenome> pop;
        for (std::size_t i = 0; i < tuner_.mu; ++i) pop.push_back(ConfigGenome::random(rng_));
        std::size_t fresh = ensure_scored(pop);
        HvFrame frame = frame_for(pop);
        std::vector<double> fit = fitness(pop, frame);

        TuneResult result;
        result.fitness_seeds = seeds_;
        log(result, 0, pop, fit, frame, fresh);

        for (std::size_t gen = 1; gen <= tuner_.generations; ++gen) {
            std::vector<ConfigGenome> offspring;
            while (offspring.size() < tuner_.mu) {
                const ConfigGenome& a = pop[tournament(fit)];
                const ConfigGenome& b = pop[tournament(fit)];
                ConfigGenome c1 = a;
                ConfigGenome c2 = b;
                if (rng_.bernoulli(tuner_.crossover_prob)) {
                    for (std::size_t i = 0; i < kGenomeBits; ++i) {
                        if (rng_.bernoulli(0.5)) std::swap(c1.bits[i], c2.bits[i]);
                    }
                }
                for (auto* c : {&c1, &c2}) {
                    for (auto& bit : c->bits) {
                        if (rng_.bernoulli(tuner_.bitflip_prob)) bit ^= 1;
                    }
                }
                offspring.push_back(c1);
                if (offspring.size() < tuner_.mu) offspring.push_back(c2);
            }
            fresh = ensure_scored(offspring);

            std::vector<ConfigGenome> merged = pop;
            merged.insert(merged.end(), offspring.begin(), offspring.end());
            frame = frame_for(merged);
            const std::vector<double> merged_fit = fitness(merged, frame);

            // (mu + mu) truncation; on equal fitness parents precede offspring.
            std::vector<std::size_t> order(merged.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t x, std::size_t y) { return merged_fit[x] > merged_fit[y]; });
            pop.clear();
            fit.clear();
            for (std::size_t i = 0; i < tuner_.mu; ++i) {
                pop.push_back(merged[order[i]]);
                fit.push_back(merged_fit[order[i]]);
            }
            log(result, gen, pop, fit, frame, fresh);
        }

        const std::size_t best = static_cast<std::size_t>(std::max_element(fit.begin(), fit.end()) - fit.begin());
        result.best = pop[best];
        result.best_fitness = fit[best];
        result.best_config = decode_genome(pop[best], tuner_.population, tuner_.inner_budget);
        return result;
    }

private:
    std::size_t tournament(const std::vector<double>& fit) {
        std::size_t best = rng_.index(fit.size());
        for (std::size_t i = 1; i < tuner_.tournament; ++i) {
            const std::size_t c = rng_.index(fit.size());
            if (fit[c] > fit[best] || (fit[c] == fit[best] && c < best)) best = c;
        }
        return best;
    }

    // Runs every not-yet-cached genome; work items are (genome, run) pairs.
    std::size_t ensure_scored(const std::vector<ConfigGenome>& genomes) {
        std::vector<std::uint64_t> missing;
        for (const auto& g : genomes) {
            const auto k = g.key();
            if (!cache_.count(k) && std::find(missing.begin(), missing.end(), k) == missing.end()) missing.push_back(k);
        }
        const std::size_t runs = seeds_.size();
        std::vector<std::vector<ObjectiveVector>> sets(missing.size() * runs);
        parallel_for(sets.size(), workers_, [&](std::size_t item) {
            const auto cfg = decode_genome(ConfigGenome::from_key(missing[item / runs]), tuner_.population,
                                           tuner_.inner_budget);
            const std::uint64_t seed = seeds_[item % runs];
            const std::uint64_t one[] = {seed};
            sets[item] = std::move(score_runs(cfg, problem_, tuner_.framework, one, tuner_.subset_size).sets.front());
        });
        for (std::size_t i = 0; i < missing.size(); ++i) {
            ScoredRuns sr;
            for (std::size_t r = 0; r < runs; ++r) sr.sets.push_back(std::move(sets[i * runs + r]));
            cache_.emplace(missing[i], std::move(sr));
        }
        return missing.size();
    }

    HvFrame frame_for(const std::vector<ConfigGenome>& genomes) const {
        if (tuner_.fixed_frame) return *tuner_.fixed_frame;
        std::vector<const ScoredRuns*> runs;
        for (const auto& g : genomes) runs.push_back(&cache_.at(g.key()));
        return frame_from_sets(runs, tuner_.r);
    }

    std::vector<double> fitness(const std::vector<ConfigGenome>& genomes, const HvFrame& frame) const {
        std::vector<double> out(genomes.size());
        std::map<std::uint64_t, double> memo;
        for (std::size_t i = 0; i < genomes.size(); ++i) {
            const auto k = genomes[i].key();
            auto it = memo.find(k);
            if (it == memo.end()) it = memo.emplace(k, fitness_from_runs(cache_.at(k), frame)).first;
            out[i] = it->second;
        }
        return out;
    }

    static void log(TuneResult& result, std::size_t gen, const std::vector<ConfigGenome>& pop,
                    const std::vector<double>& fit, const HvFrame& frame, std::size_t fresh) {
        GenerationLog entry;
        entry.generation = gen;
        const auto best = static_cast<std::size_t>(std::max_element(fit.begin(), fit.end()) - fit.begin());
        entry.best_fitness = fit[best];
        entry.best = pop[best];
        entry.mean_fitness = std::accumulate(fit.begin(), fit.end(), 0.0) / static_cast<double>(fit.size());
        entry.frame_ideal = frame.ideal;
        entry.frame_nadir = frame.nadir;
        entry.new_configurations = fresh;
        result.log.push_back(std::move(entry));
    }

    const Problem& problem_;
    TunerConfig tuner_;
    RandomSource rng_;
    std::vector<std::uint64_t> seeds_;
    std::size_t workers_;
    std::map<std::uint64_t, ScoredRuns> cache_;
};

}  // namespace

TuneResult tune_moead(const Problem& problem, const TunerConfig& tuner, std::uint64_t master_seed) {
    return Campaign(problem, tuner, master_seed).run();
}

}  // namespace moead
