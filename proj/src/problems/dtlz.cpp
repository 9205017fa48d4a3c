#include <cmath>
#include <numbers>

#include "internal.hpp"

namespace moead::detail {

namespace {

constexpr double kPi = std::numbers::pi;

double rastrigin_g(std::span<const double> xm) {
    double s = 0.0;
    for (double v : xm) {
        const double t = v - 0.5;
        s += t * t - std::cos(20.0 * kPi * t);
    }
    return 100.0 * (static_cast<double>(xm.size()) + s);
}

double sphere_g(std::span<const double> xm) {
    double s = 0.0;
    for (double v : xm) s += (v - 0.5) * (v - 0.5);
    return s;
}

}  // namespace

void evaluate_dtlz(Family family, std::size_t num_objectives, std::size_t k, std::span<const double> x,
                   std::span<double> out) {
    const std::size_t m_obj = num_objectives;
    const auto xm = x.subspan(m_obj - 1, k);

    if (family == Family::dtlz1) {
        const double scale = 0.5 * (1.0 + rastrigin_g(xm));
        for (std::size_t m = 0; m < m_obj; ++m) {
            double f = scale;
            for (std::size_t i = 0; i + m + 1 < m_obj; ++i) f *= x[i];
            if (m > 0) f *= 1.0 - x[m_obj - m - 1];
            out[m] = f;
        }
        return;
    }

    const double g = family == Family::dtlz3 ? rastrigin_g(xm) : sphere_g(xm);
    const double alpha = family == Family::dtlz4 ? 100.0 : 1.0;
    auto angle = [&](std::size_t i) {
        const double v = alpha == 1.0 ? x[i] : std::pow(x[i], alpha);
        return v * kPi / 2.0;
    };
    for (std::size_t m = 0; m < m_obj; ++m) {
        double f = 1.0 + g;
        for (std::size_t i = 0; i + m + 1 < m_obj; ++i) f *= std::cos(angle(i));
        if (m > 0) f *= std::sin(angle(m_obj - m - 1));
        out[m] = f;
    }
}

}  // namespace moead::detail

namespace moead {

double rastrigin_term_max() {
    // Interior maximum sits just beyond y = 0.45 where cos(20 pi y) = -1.
    constexpr double w = 20.0 * std::numbers::pi;
    double y = 0.45;
    for (int it = 0; it < 60; ++it) {
        const double d1 = 2.0 * y + w * std::sin(w * y);
        const double d2 = 2.0 + w * w * std::cos(w * y);
        y -= d1 / d2;
    }
    return y * y - std::cos(w * y);
}

}  // namespace moead
