#include <limits>

#include "moead/decomposition.hpp"

namespace moead {

std::uint64_t lattice_size(std::size_t num_objectives, std::size_t divisions) {
    if (num_objectives < 1) throw ContractError("lattice_size: M must be positive");
    // C(H+M-1, M-1) accumulated as a running product of exact binomials.
    const std::uint64_t r = num_objectives - 1;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        const std::uint64_t num = divisions + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / num) {
            throw ContractError("lattice_size: binomial coefficient overflows 64 bits");
        }
        result = result * num / i;
    }
    return result;
}

namespace {

void compose(std::size_t remaining, std::size_t slots, std::vector<std::size_t>& prefix,
             std::vector<std::vector<std::size_t>>& out) {
    if (slots == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
        prefix.push_back(c);
        compose(remaining - c, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

WeightLattice das_dennis(std::size_t num_objectives, std::size_t divisions) {
    if (num_objectives < 2 || divisions < 1) throw ContractError("das_dennis: need M >= 2 and H >= 1");
    const std::uint64_t n = lattice_size(num_objectives, divisions);
    if (n > (std::uint64_t{1} << 28)) throw ContractError("das_dennis: lattice too large to materialize");

    std::vector<std::vector<std::size_t>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    std::vector<std::size_t> prefix;
    compose(divisions, num_objectives, prefix, comps);

    WeightLattice lattice;
    lattice.divisions = divisions;
    lattice.vectors.reserve(comps.size());
    const double h = static_cast<double>(divisions);
    for (const auto& c : comps) {
        std::vector<double> w(num_objectives);
        for (std::size_t i = 0; i < num_objectives; ++i) w[i] = static_cast<double>(c[i]) / h;
        lattice.vectors.push_back(std::move(w));
    }
    return lattice;
}

std::optional<std::size_t> divisions_for_population(std::size_t num_objectives, std::size_t population) {
    for (std::size_t h = 1;; ++h) {
        const std::uint64_t n = lattice_size(num_objectives, h);
        if (n == population) return h;
        if (n > population) return std::nullopt;
    }
}

}  // namespace moead
