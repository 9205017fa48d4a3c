#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "moead/decomposition.hpp"

namespace moead {

namespace {

constexpr double kZeroWeightSubstitute = 1e-6;

void require_same_length(std::span<const double> a, std::span<const double> b, const char* who) {
    if (a.size() != b.size()) throw ContractError(std::string(who) + ": length mismatch");
}

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// d1 = |diff . w| / ||w||, d2 = ||diff - d1 w / ||w|| ||
std::pair<double, double> boundary_distances(std::span<const double> diff, std::span<const double> w) {
    const double wn = norm(w);
    if (!(wn > 0.0)) throw ContractError("PBI/IPBI: weight vector must be non-zero");
    double dot = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) dot += diff[i] * w[i];
    const double d1 = std::abs(dot) / wn;
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double r = diff[i] - d1 * w[i] / wn;
        s += r * r;
    }
    return {d1, std::sqrt(s)};
}

}  // namespace

std::string_view scalarizer_name(ScalarizerKind kind) {
    switch (kind) {
        case ScalarizerKind::ws: return "WS";
        case ScalarizerKind::tch: return "TCH";
        case ScalarizerKind::mtch: return "MTCH";
        case ScalarizerKind::pbi: return "PBI";
        case ScalarizerKind::ipbi: return "IPBI";
    }
    return "?";
}

ScalarizerKind parse_scalarizer(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (auto k : {ScalarizerKind::ws, ScalarizerKind::tch, ScalarizerKind::mtch, ScalarizerKind::pbi,
                   ScalarizerKind::ipbi}) {
        if (scalarizer_name(k) == upper) return k;
    }
    throw ContractError("unknown scalarizing function: " + std::string(name));
}

ScalarizerChoice ScalarizerChoice::make(ScalarizerKind kind, double theta) {
    ScalarizerChoice c;
    c.kind = kind;
    if (uses_penalty(kind)) c.theta = theta;
    return c;
}

double scalarize_ws(std::span<const double> f, std::span<const double> w) {
    require_same_length(f, w, "scalarize_ws");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
    return s;
}

double scalarize_tch(std::span<const double> f, std::span<const double> w, std::span<const double> z_star) {
    require_same_length(f, w, "scalarize_tch");
    require_same_length(f, z_star, "scalarize_tch");
    double g = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) g = std::max(g, w[i] * std::abs(z_star[i] - f[i]));
    return g;
}

double scalarize_mtch(std::span<const double> f, std::span<const double> w, std::span<const double> z_star) {
    require_same_length(f, w, "scalarize_mtch");
    require_same_length(f, z_star, "scalarize_mtch");
    double g = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double wi = w[i] > 0.0 ? w[i] : kZeroWeightSubstitute;
        g = std::max(g, std::abs(z_star[i] - f[i]) / wi);
    }
    return g;
}

double scalarize_pbi(std::span<const double> f, std::span<const double> w, std::span<const double> z_star,
                     double theta) {
    require_same_length(f, w, "scalarize_pbi");
    require_same_length(f, z_star, "scalarize_pbi");
    std::array<double, 16> buf{};
    std::vector<double> heap;
    std::span<double> diff = f.size() <= buf.size() ? std::span<double>(buf.data(), f.size())
                                                    : std::span<double>((heap.resize(f.size()), heap));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i] - z_star[i];
    const auto [d1, d2] = boundary_distances(diff, w);
    return d1 + theta * d2;
}

double scalarize_ipbi(std::span<const double> f, std::span<const double> w, std::span<const double> z_nad,
                      double theta) {
    require_same_length(f, w, "scalarize_ipbi");
    require_same_length(f, z_nad, "scalarize_ipbi");
    std::array<double, 16> buf{};
    std::vector<double> heap;
    std::span<double> diff = f.size() <= buf.size() ? std::span<double>(buf.data(), f.size())
                                                    : std::span<double>((heap.resize(f.size()), heap));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = z_nad[i] - f[i];
    const auto [d1, d2] = boundary_distances(diff, w);
    return d1 - theta * d2;
}

double scalarize(const ScalarizerChoice& choice, std::span<const double> f, std::span<const double> w,
                 std::span<const double> z_star, std::span<const double> z_nad) {
    switch (choice.kind) {
        case ScalarizerKind::ws: return scalarize_ws(f, w);
        case ScalarizerKind::tch: return scalarize_tch(f, w, z_star);
        case ScalarizerKind::mtch: return scalarize_mtch(f, w, z_star);
        case ScalarizerKind::pbi: return scalarize_pbi(f, w, z_star, choice.theta.value_or(5.0));
        case ScalarizerKind::ipbi: return scalarize_ipbi(f, w, z_nad, choice.theta.value_or(0.1));
    }
    return 0.0;
}

}  // namespace moead
