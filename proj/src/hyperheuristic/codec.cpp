#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "moead/hyperheuristic.hpp"

namespace moead {

namespace {

constexpr std::array<GenomeField, 11> kLayout = {{
    {"g", 3},
    {"theta", 10},
    {"eps_ini", 4},
    {"eps_end", 4},
    {"t_mate", 3},
    {"t_rep", 3},
    {"eps_norm", 10},
    {"crossover", 3},
    {"p_c", 5},
    {"mutation", 3},
    {"p_m", 5},
}};

std::uint64_t bits_value(std::span<const std::uint8_t> bits) {
    if (bits.empty() || bits.size() > 62) throw ContractError("decode: field width must lie in [1, 62]");
    std::uint64_t v = 0;
    for (auto b : bits) {
        if (b > 1) throw ContractError("decode: bits must be 0 or 1");
        v = (v << 1) | b;
    }
    return v;
}

std::vector<std::uint8_t> parse_bits(std::string_view s) {
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw ContractError("bit strings may only contain '0' and '1'");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::size_t categorical_index(std::uint64_t v, std::size_t width, std::size_t option_count) {
    if (option_count == 0) throw ContractError("decode_categorical: option_count must be positive");
    const std::uint64_t max = (std::uint64_t{1} << width) - 1;
    // round((n - 1) v / max) with halves up, in exact integer arithmetic.
    const std::uint64_t num = 2 * (option_count - 1) * v + max;
    return 1 + static_cast<std::size_t>(num / (2 * max));
}

double real_value(std::uint64_t v, std::size_t width, double lo, double hi) {
    if (!(lo < hi)) throw ContractError("decode_real: need lo < hi");
    const std::uint64_t max = (std::uint64_t{1} << width) - 1;
    if (v == max) return hi;
    return lo + (hi - lo) * static_cast<double>(v) / static_cast<double>(max);
}

// Slices the genome into its fields.
struct FieldCursor {
    const ConfigGenome& g;
    std::size_t offset = 0;
    std::pair<std::uint64_t, std::size_t> next(std::size_t field) {
        const std::size_t w = kLayout[field].width;
        const auto v = bits_value(std::span<const std::uint8_t>(g.bits).subspan(offset, w));
        offset += w;
        return {v, w};
    }
};

}  // namespace

ConfigGenome ConfigGenome::from_string(std::string_view s) {
    if (s.size() != kGenomeBits) throw ContractError("genome strings must have exactly 53 bits");
    ConfigGenome g;
    const auto bits = parse_bits(s);
    std::copy(bits.begin(), bits.end(), g.bits.begin());
    return g;
}

std::string ConfigGenome::to_string() const {
    std::string s(kGenomeBits, '0');
    for (std::size_t i = 0; i < kGenomeBits; ++i) s[i] = static_cast<char>('0' + bits[i]);
    return s;
}

std::uint64_t ConfigGenome::key() const { return bits_value(bits); }

ConfigGenome ConfigGenome::from_key(std::uint64_t key) {
    if (key >> kGenomeBits) throw ContractError("genome key exceeds 53 bits");
    ConfigGenome g;
    for (std::size_t i = 0; i < kGenomeBits; ++i) g.bits[kGenomeBits - 1 - i] = static_cast<std::uint8_t>((key >> i) & 1);
    return g;
}

ConfigGenome ConfigGenome::random(RandomSource& rng) {
    return from_key(rng.next_u64() >> (64 - kGenomeBits));
}

std::span<const GenomeField> genome_layout() { return kLayout; }

std::size_t decode_categorical(std::span<const std::uint8_t> bits, std::size_t option_count) {
    return categorical_index(bits_value(bits), bits.size(), option_count);
}

std::size_t decode_categorical(std::string_view bits, std::size_t option_count) {
    return decode_categorical(parse_bits(bits), option_count);
}

double decode_real(std::span<const std::uint8_t> bits, double lo, double hi) {
    return real_value(bits_value(bits), bits.size(), lo, hi);
}

double decode_real(std::string_view bits, double lo, double hi) { return decode_real(parse_bits(bits), lo, hi); }

double decode_theta(const ConfigGenome& genome) {
    FieldCursor c{genome};
    c.next(0);
    const auto [v, w] = c.next(1);
    return real_value(v, w, domains::theta_lo, domains::theta_hi);
}

MoeadConfig decode_genome(const ConfigGenome& genome, std::size_t population, std::size_t budget) {
    FieldCursor c{genome};
    auto pick = [&](std::size_t field, auto const& domain) {
        const auto [v, w] = c.next(field);
        return domain[categorical_index(v, w, domain.size()) - 1];
    };
    auto real = [&](std::size_t field, double lo, double hi) {
        const auto [v, w] = c.next(field);
        return real_value(v, w, lo, hi);
    };

    MoeadConfig cfg;
    cfg.population = population;
    cfg.budget = budget;
    const ScalarizerKind kind = pick(0, domains::scalarizers);
    const double theta = real(1, domains::theta_lo, domains::theta_hi);
    cfg.scalarizer = ScalarizerChoice::make(kind, theta);
    cfg.eps_ini = pick(2, domains::eps_ini);
    cfg.eps_end = pick(3, domains::eps_end);
    cfg.mating = NeighborhoodSize::of_fraction(pick(4, domains::neighborhood));
    cfg.replacement = NeighborhoodSize::of_fraction(pick(5, domains::neighborhood));
    cfg.eps_norm = pick(6, domains::eps_norm);
    cfg.normalize = true;
    cfg.variation.crossover = pick(7, domains::crossovers);
    cfg.variation.p_c = real(8, 0.0, 1.0);
    cfg.variation.mutation = pick(9, domains::mutations);
    cfg.variation.p_m = real(10, 0.0, 1.0);
    return cfg;
}

std::optional<ConfigGenome> encode_config(const MoeadConfig& config, double tolerance) {
    if (config.mating.kind != NeighborhoodSize::Kind::fraction ||
        config.replacement.kind != NeighborhoodSize::Kind::fraction || !config.variation.p_m) {
        return std::nullopt;
    }
    ConfigGenome g;
    std::size_t offset = 0;
    // Finds the first field value whose decoding satisfies `match`.
    auto place = [&](std::size_t field, auto&& match) {
        const std::size_t w = kLayout[field].width;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << w); ++v) {
            if (match(v, w)) {
                for (std::size_t i = 0; i < w; ++i) g.bits[offset + i] = static_cast<std::uint8_t>((v >> (w - 1 - i)) & 1);
                offset += w;
                return true;
            }
        }
        return false;
    };
    auto categorical = [&](std::size_t field, auto const& domain, auto value, auto&& same) {
        return place(field, [&](std::uint64_t v, std::size_t w) {
            return same(domain[categorical_index(v, w, domain.size()) - 1], value);
        });
    };
    auto real = [&](std::size_t field, double lo, double hi, double value) {
        return place(field, [&](std::uint64_t v, std::size_t w) {
            return std::abs(real_value(v, w, lo, hi) - value) <= tolerance;
        });
    };
    auto eq = [](auto a, auto b) { return a == b; };
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };

    const double theta = config.scalarizer.theta.value_or(0.0);
    const bool ok = categorical(0, domains::scalarizers, config.scalarizer.kind, eq) &&
                    real(1, domains::theta_lo, domains::theta_hi, theta) &&
                    categorical(2, domains::eps_ini, config.eps_ini, close) &&
                    categorical(3, domains::eps_end, config.eps_end, close) &&
                    categorical(4, domains::neighborhood, config.mating.fraction, close) &&
                    categorical(5, domains::neighborhood, config.replacement.fraction, close) &&
                    categorical(6, domains::eps_norm, config.eps_norm, close) &&
                    categorical(7, domains::crossovers, config.variation.crossover, eq) &&
                    real(8, 0.0, 1.0, config.variation.p_c) &&
                    categorical(9, domains::mutations, config.variation.mutation, eq) &&
                    real(10, 0.0, 1.0, *config.variation.p_m);
    if (!ok) return std::nullopt;
    return g;
}

std::string_view framework_name(Framework f) {
    return f == Framework::final_population ? "final_population" : "solution_selection";
}

Framework parse_framework(std::string_view name) {
    std::string n(name);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == "final_population" || n == "fp") return Framework::final_population;
    if (n == "solution_selection" || n == "ss") return Framework::solution_selection;
    throw ContractError("unknown framework: " + std::string(name));
}

}  // namespace moead
