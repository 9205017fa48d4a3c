#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moead/indicators.hpp"
#include "moead/moead.hpp"

namespace moead {

inline constexpr std::size_t kGenomeBits = 53;

/// Bit string, most significant bit of each field first.
struct ConfigGenome {
    std::array<std::uint8_t, kGenomeBits> bits{};

    static ConfigGenome from_string(std::string_view s);
    std::string to_string() const;
    /// The 53 bits packed into an integer, first bit most significant.
    std::uint64_t key() const;
    static ConfigGenome from_key(std::uint64_t key);
    static ConfigGenome random(RandomSource& rng);

    bool operator==(const ConfigGenome&) const = default;
};

/// Field layout in genome order.
struct GenomeField {
    std::string_view name;
    std::size_t width;
};
std::span<const GenomeField> genome_layout();

namespace domains {
inline constexpr std::array<ScalarizerKind, 5> scalarizers = {ScalarizerKind::ws, ScalarizerKind::tch,
                                                             ScalarizerKind::pbi, ScalarizerKind::ipbi,
                                                             ScalarizerKind::mtch};
inline constexpr std::array<double, 16> eps_ini = {0, 0.001, 0.005, 0.01, 0.05, 0.1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
inline constexpr std::array<double, 16> eps_end = {-5,     -4,     -3, -2,    -1,    -0.1, -0.05, -0.01,
                                                   -0.005, -0.001, 0,  0.001, 0.005, 0.01, 0.05,  0.1};
inline constexpr std::array<double, 8> neighborhood = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40};
inline constexpr std::array<double, 12> eps_norm = {1e-6, 1e-5, 1e-4, 1e-3, 0.01, 0.1, 1, 5, 10, 15, 20, 25};
inline constexpr std::array<CrossoverKind, 3> crossovers = {CrossoverKind::sbx, CrossoverKind::wax, CrossoverKind::lax};
inline constexpr std::array<MutationKind, 3> mutations = {MutationKind::polynomial, MutationKind::gaussian,
                                                          MutationKind::random};
inline constexpr double theta_lo = 0.0, theta_hi = 10.0;
}  // namespace domains

/// 1 + round((n - 1) / (2^b - 1) * value), halves rounded away from zero. Result in 1..n.
std::size_t decode_categorical(std::span<const std::uint8_t> bits, std::size_t option_count);
std::size_t decode_categorical(std::string_view bits, std::size_t option_count);
/// lo + (hi - lo) * value / (2^b - 1)
double decode_real(std::span<const std::uint8_t> bits, double lo, double hi);
double decode_real(std::string_view bits, double lo, double hi);

/// Total map from genomes to configurations; population and budget are not encoded.
MoeadConfig decode_genome(const ConfigGenome& genome, std::size_t population = 91, std::size_t budget = 10000);
/// Penalty parameter carried by the genome, whether or not the scalarizer uses it.
double decode_theta(const ConfigGenome& genome);

/// Some genome whose decoding matches `config` (reals within `tolerance`), if any.
std::optional<ConfigGenome> encode_config(const MoeadConfig& config, double tolerance = 5e-5);

enum class Framework { final_population, solution_selection };

std::string_view framework_name(Framework f);
Framework parse_framework(std::string_view name);

/// Scored objective sets of the fitness runs of one configuration.
struct ScoredRuns {
    std::vector<std::vector<ObjectiveVector>> sets;
};

/// Executes one run per seed and keeps the set each framework scores: the
/// final population, or `subset_size` archive solutions chosen by
/// distance-based selection among the non-dominated ones.
ScoredRuns score_runs(const MoeadConfig& config, const Problem& problem, Framework framework,
                      std::span<const std::uint64_t> seeds, std::size_t subset_size = 91);

/// Mean hypervolume of the scored sets in `frame`.
double fitness_from_runs(const ScoredRuns& runs, const HvFrame& frame);

double evaluate_config(const MoeadConfig& config, const Problem& problem, Framework framework,
                       std::span<const std::uint64_t> seeds, const HvFrame& frame);

/// Ideal/nadir of the non-dominated union of the given sets. A zero-width
/// axis is widened to nadir = ideal + 1.
HvFrame frame_from_sets(const std::vector<const ScoredRuns*>& runs, double r = 1.1);

struct TunerConfig {
    std::size_t mu = 100;
    std::size_t generations = 100;
    std::size_t tournament = 3;
    double crossover_prob = 1.0;
    double bitflip_prob = 1.0 / static_cast<double>(kGenomeBits);
    std::size_t runs = 5;
    Framework framework = Framework::final_population;
    std::size_t inner_budget = 10000;
    std::size_t population = 91;
    std::size_t subset_size = 91;
    double r = 1.1;
    /// When set, fitness is measured in this frame instead of one rebuilt each generation.
    std::optional<HvFrame> fixed_frame;
    /// 0 selects default_workers().
    std::size_t workers = 0;

    void validate() const;
};

struct GenerationLog {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    ConfigGenome best;
    ObjectiveVector frame_ideal;
    ObjectiveVector frame_nadir;
    std::size_t new_configurations = 0;
};

struct TuneResult {
    ConfigGenome best;
    double best_fitness = 0.0;
    MoeadConfig best_config;
    std::vector<GenerationLog> log;
    std::vector<std::uint64_t> fitness_seeds;
};

/// The 5 (runs) fitness seeds shared by every configuration of a campaign.
std::vector<std::uint64_t> campaign_seeds(std::uint64_t master_seed, std::size_t runs);

TuneResult tune_moead(const Problem& problem, const TunerConfig& tuner, std::uint64_t master_seed);

}  // namespace moead
