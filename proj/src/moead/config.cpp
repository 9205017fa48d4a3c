#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "moead/moead.hpp"

namespace moead {

std::size_t NeighborhoodSize::resolve(std::size_t population) const {
    std::size_t n = count;
    if (kind == Kind::fraction) {
        if (!(fraction > 0.0 && fraction <= 1.0)) throw ContractError("neighborhood fraction must lie in (0, 1]");
        // The small guard keeps exact products such as 0.2 * 91 = 18.2 from rounding up past an integer.
        n = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(population) - 1e-9));
    }
    return std::clamp<std::size_t>(n, 2, population);
}

void MoeadConfig::validate() const {
    if (population < 2) throw ContractError("population must be at least 2");
    if (budget < population) throw ContractError("budget must cover the initial population");
    if (uses_penalty(scalarizer.kind) != scalarizer.theta.has_value()) {
        throw ContractError("theta must be set exactly for PBI and IPBI");
    }
    if (scalarizer.theta && !(std::isfinite(*scalarizer.theta) && *scalarizer.theta >= 0.0)) {
        throw ContractError("theta must be a non-negative finite number");
    }
    if (!std::isfinite(eps_ini) || !std::isfinite(eps_end)) throw ContractError("epsilon schedule must be finite");
    if (normalize && !(eps_norm > 0.0)) throw ContractError("eps_norm must be positive");
    for (const auto* n : {&mating, &replacement}) {
        if (n->kind == NeighborhoodSize::Kind::fraction && !(n->fraction > 0.0 && n->fraction <= 1.0)) {
            throw ContractError("neighborhood fraction must lie in (0, 1]");
        }
        if (n->kind == NeighborhoodSize::Kind::count && n->count < 1) {
            throw ContractError("neighborhood size must be positive");
        }
    }
    variation.validate();
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_real(const std::string& v, std::size_t line) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + v + "'", line);
    }
}

std::size_t to_count(const std::string& v, std::size_t line) {
    const double d = to_real(v, line);
    if (!(d >= 0.0) || d != std::floor(d)) throw ParseError("expected a non-negative integer, got '" + v + "'", line);
    return static_cast<std::size_t>(d);
}

bool to_bool(const std::string& v, std::size_t line) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ParseError("expected a boolean, got '" + v + "'", line);
}

}  // namespace

MoeadConfig parse_config(std::istream& in) {
    MoeadConfig cfg;
    std::optional<double> theta;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        if (value.empty()) throw ParseError("missing value for '" + key + "'", line);

        try {
            if (key == "scalarizer") cfg.scalarizer.kind = parse_scalarizer(value);
            else if (key == "theta") theta = to_real(value, line);
            else if (key == "eps_ini") cfg.eps_ini = to_real(value, line);
            else if (key == "eps_end") cfg.eps_end = to_real(value, line);
            else if (key == "t_mate_frac") cfg.mating = NeighborhoodSize::of_fraction(to_real(value, line));
            else if (key == "t_rep_frac") cfg.replacement = NeighborhoodSize::of_fraction(to_real(value, line));
            else if (key == "t_mate_size") cfg.mating = NeighborhoodSize::of_count(to_count(value, line));
            else if (key == "t_rep_size") cfg.replacement = NeighborhoodSize::of_count(to_count(value, line));
            else if (key == "eps_norm") cfg.eps_norm = to_real(value, line);
            else if (key == "normalize") cfg.normalize = to_bool(value, line);
            else if (key == "crossover") cfg.variation.crossover = parse_crossover(value);
            else if (key == "p_c") cfg.variation.p_c = to_real(value, line);
            else if (key == "mutation") cfg.variation.mutation = parse_mutation(value);
            else if (key == "p_m") {
                if (value == "1/D" || value == "1/d") cfg.variation.p_m.reset();
                else cfg.variation.p_m = to_real(value, line);
            }
            else if (key == "eta_c") cfg.variation.eta_c = to_real(value, line);
            else if (key == "eta_m") cfg.variation.eta_m = to_real(value, line);
            else if (key == "sigma_frac") cfg.variation.sigma_frac = to_real(value, line);
            else if (key == "population") cfg.population = to_count(value, line);
            else if (key == "budget") cfg.budget = to_count(value, line);
            else throw ParseError("unknown key '" + key + "'", line);
        } catch (const ContractError& e) {
            throw ParseError(e.what(), line);
        }
    }
    if (uses_penalty(cfg.scalarizer.kind)) {
        cfg.scalarizer.theta = theta.value_or(cfg.scalarizer.kind == ScalarizerKind::pbi ? 5.0 : 0.1);
    } else {
        cfg.scalarizer.theta.reset();
    }
    try {
        cfg.validate();
    } catch (const ContractError& e) {
        throw ParseError(e.what(), 0);
    }
    return cfg;
}

MoeadConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open configuration file: " + path);
    return parse_config(in);
}

std::string format_config(const MoeadConfig& c) {
    std::ostringstream out;
    auto neighborhood = [&](const char* stem, const NeighborhoodSize& n) {
        if (n.kind == NeighborhoodSize::Kind::fraction) {
            out << "t_" << stem << "_frac = " << format_real(n.fraction) << '\n';
        } else {
            out << "t_" << stem << "_size = " << n.count << '\n';
        }
    };
    out << "scalarizer = " << scalarizer_name(c.scalarizer.kind) << '\n';
    if (c.scalarizer.theta) out << "theta = " << format_real(*c.scalarizer.theta) << '\n';
    out << "eps_ini = " << format_real(c.eps_ini) << '\n';
    out << "eps_end = " << format_real(c.eps_end) << '\n';
    neighborhood("mate", c.mating);
    neighborhood("rep", c.replacement);
    out << "eps_norm = " << format_real(c.eps_norm) << '\n';
    out << "normalize = " << (c.normalize ? "true" : "false") << '\n';
    out << "crossover = " << crossover_name(c.variation.crossover) << '\n';
    out << "p_c = " << format_real(c.variation.p_c) << '\n';
    out << "mutation = " << mutation_name(c.variation.mutation) << '\n';
    out << "p_m = " << (c.variation.p_m ? format_real(*c.variation.p_m) : std::string("1/D")) << '\n';
    out << "eta_c = " << format_real(c.variation.eta_c) << '\n';
    out << "eta_m = " << format_real(c.variation.eta_m) << '\n';
    out << "sigma_frac = " << format_real(c.variation.sigma_frac) << '\n';
    out << "population = " << c.population << '\n';
    out << "budget = " << c.budget << '\n';
    return out.str();
}

std::vector<std::vector<std::size_t>> build_neighborhoods(const WeightLattice& lattice, NeighborhoodSize size) {
    const std::size_t n = lattice.size();
    if (n < 2) throw ContractError("build_neighborhoods: need at least two weight vectors");
    const std::size_t t = size.resolve(n);
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<double> dist(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t m = 0; m < lattice.vectors[i].size(); ++m) {
                const double d = lattice.vectors[i][m] - lattice.vectors[j][m];
                s += d * d;
            }
            dist[j] = s;
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        out[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return out;
}

}  // namespace moead
