// WFG toolkit: transformation functions, shape functions and the nine
// instances, written against the component definitions of the toolkit.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "internal.hpp"

namespace moead::detail {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double b_poly(double y, double alpha) { return clamp01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
    const double t1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    const double t2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return clamp01(a + t1 - t2);
}

double b_param(double y, double u, double a, double b, double c) {
    const double v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
    return clamp01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) { return clamp01(std::abs(y - a) / std::abs(std::floor(a - y) + a)); }

double s_decept(double y, double a, double b, double c) {
    const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return clamp01(1.0 + (std::abs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
    const double t1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double t2 = (4.0 * a + 2.0) * kPi * (0.5 - t1);
    return clamp01((1.0 + std::cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return clamp01(num / den);
}

double r_sum_unit(std::span<const double> y) {
    double num = 0.0;
    for (double v : y) num += v;
    return clamp01(num / static_cast<double>(y.size()));
}

double r_nonsep(std::span<const double> y, std::size_t a) {
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) num += std::abs(y[j] - y[(j + k + 1) % n]);
    }
    const double half = std::ceil(static_cast<double>(a) / 2.0);
    const double den = (static_cast<double>(n) / static_cast<double>(a)) * half *
                       (1.0 + 2.0 * static_cast<double>(a) - 2.0 * half);
    return clamp01(num / den);
}

enum class ShapeKind { convex_mixed, convex_disc, linear, concave };

ShapeKind shape_of(Family family) {
    switch (family) {
        case Family::wfg1: return ShapeKind::convex_mixed;
        case Family::wfg2: return ShapeKind::convex_disc;
        case Family::wfg3: return ShapeKind::linear;
        default: return ShapeKind::concave;
    }
}

// h_m = prod_{i < M-m} lead(x_i) * trail(x_{M-m}) with 0-based m, no trailing factor for m = 0.
template <class Lead, class Trail>
void product_shape(std::span<const double> x, std::size_t num_objectives, Lead lead, Trail trail,
                   std::vector<double>& h) {
    for (std::size_t m = 0; m < num_objectives; ++m) {
        double v = 1.0;
        for (std::size_t i = 0; i + m + 1 < num_objectives; ++i) v *= lead(x[i]);
        if (m > 0) v *= trail(x[num_objectives - m - 1]);
        h[m] = v;
    }
}

// Reduces transformed parameters to the M-vector t: r_sum (weighted or unit) or
// r_nonsep over k/(M-1) position groups plus one distance group.
enum class Reduction { weighted_sum, unit_sum, nonsep };

std::vector<double> reduce(std::span<const double> y, std::size_t num_objectives, std::size_t k, Reduction how) {
    const std::size_t groups = num_objectives - 1;
    const std::size_t gs = k / groups;
    std::vector<double> t(num_objectives);
    std::vector<double> w;
    if (how == Reduction::weighted_sum) {
        w.resize(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) w[i] = 2.0 * static_cast<double>(i + 1);
    }
    auto apply = [&](std::size_t begin, std::size_t len) {
        const auto seg = y.subspan(begin, len);
        switch (how) {
            case Reduction::weighted_sum: return r_sum(seg, std::span<const double>(w).subspan(begin, len));
            case Reduction::unit_sum: return r_sum_unit(seg);
            case Reduction::nonsep: return r_nonsep(seg, len);
        }
        return 0.0;
    };
    for (std::size_t g = 0; g < groups; ++g) t[g] = apply(g * gs, gs);
    t[groups] = apply(k, y.size() - k);
    return t;
}

}  // namespace

std::vector<double> wfg_shape(Family family, std::size_t num_objectives, std::span<const double> x) {
    std::vector<double> h(num_objectives);
    const ShapeKind kind = shape_of(family);
    switch (kind) {
        case ShapeKind::convex_mixed:
        case ShapeKind::convex_disc:
            product_shape(
                x, num_objectives, [](double v) { return 1.0 - std::cos(v * kPi / 2.0); },
                [](double v) { return 1.0 - std::sin(v * kPi / 2.0); }, h);
            break;
        case ShapeKind::linear:
            product_shape(
                x, num_objectives, [](double v) { return v; }, [](double v) { return 1.0 - v; }, h);
            break;
        case ShapeKind::concave:
            product_shape(
                x, num_objectives, [](double v) { return std::sin(v * kPi / 2.0); },
                [](double v) { return std::cos(v * kPi / 2.0); }, h);
            break;
    }
    const double x1 = x[0];
    if (kind == ShapeKind::convex_mixed) {
        constexpr double a = 5.0;
        h[num_objectives - 1] = 1.0 - x1 - std::cos(2.0 * a * kPi * x1 + kPi / 2.0) / (2.0 * a * kPi);
    } else if (kind == ShapeKind::convex_disc) {
        constexpr double a = 5.0;
        const double c = std::cos(a * x1 * kPi);
        h[num_objectives - 1] = 1.0 - x1 * c * c;
    }
    return h;
}

void evaluate_wfg(Family family, std::size_t num_objectives, std::size_t k, std::size_t l, std::span<const double> z,
                  std::span<double> out) {
    const std::size_t n = k + l;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = z[i] / (2.0 * static_cast<double>(i + 1));

    std::vector<double> t;
    switch (family) {
        case Family::wfg1: {
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            for (std::size_t i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
            for (std::size_t i = 0; i < n; ++i) y[i] = b_poly(y[i], 0.02);
            t = reduce(y, num_objectives, k, Reduction::weighted_sum);
            break;
        }
        case Family::wfg2:
        case Family::wfg3: {
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            std::vector<double> pairs(k + l / 2);
            std::copy_n(y.begin(), k, pairs.begin());
            for (std::size_t j = 0; j < l / 2; ++j) {
                const double pair[2] = {y[k + 2 * j], y[k + 2 * j + 1]};
                pairs[k + j] = r_nonsep(pair, 2);
            }
            t = reduce(pairs, num_objectives, k, Reduction::unit_sum);
            break;
        }
        case Family::wfg4:
            for (auto& v : y) v = s_multi(v, 30.0, 10.0, 0.35);
            t = reduce(y, num_objectives, k, Reduction::unit_sum);
            break;
        case Family::wfg5:
            for (auto& v : y) v = s_decept(v, 0.35, 0.001, 0.05);
            t = reduce(y, num_objectives, k, Reduction::unit_sum);
            break;
        case Family::wfg6:
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            t = reduce(y, num_objectives, k, Reduction::nonsep);
            break;
        case Family::wfg7: {
            const std::vector<double> src = y;
            for (std::size_t i = 0; i < k; ++i) {
                const double u = r_sum_unit(std::span<const double>(src).subspan(i + 1));
                y[i] = b_param(src[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            t = reduce(y, num_objectives, k, Reduction::unit_sum);
            break;
        }
        case Family::wfg8: {
            const std::vector<double> src = y;
            for (std::size_t i = k; i < n; ++i) {
                const double u = r_sum_unit(std::span<const double>(src).subspan(0, i));
                y[i] = b_param(src[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            t = reduce(y, num_objectives, k, Reduction::unit_sum);
            break;
        }
        case Family::wfg9: {
            const std::vector<double> src = y;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double u = r_sum_unit(std::span<const double>(src).subspan(i + 1));
                y[i] = b_param(src[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            for (std::size_t i = 0; i < k; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
            for (std::size_t i = k; i < n; ++i) y[i] = s_multi(y[i], 30.0, 95.0, 0.35);
            t = reduce(y, num_objectives, k, Reduction::nonsep);
            break;
        }
        default:
            throw ContractError("evaluate_wfg: not a WFG family");
    }

    // Underlying position parameters; WFG3 is degenerate (A_i = 0 for i >= 2).
    const double t_last = t[num_objectives - 1];
    std::vector<double> x(num_objectives - 1);
    for (std::size_t i = 0; i + 1 < num_objectives; ++i) {
        const double a = (family == Family::wfg3 && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(t_last, a) * (t[i] - 0.5) + 0.5;
    }
    const auto h = wfg_shape(family, num_objectives, x);
    for (std::size_t m = 0; m < num_objectives; ++m) {
        out[m] = t_last + 2.0 * static_cast<double>(m + 1) * h[m];
    }
}

}  // namespace moead::detail
