#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>

#include "internal.hpp"
#include "moead/decomposition.hpp"

namespace moead {

namespace {

constexpr std::size_t kDenseSample = 10000;

// Largest simplex lattice with at most `count` vectors; truncated when count < M.
std::vector<std::vector<double>> simplex_points(std::size_t num_objectives, std::size_t count) {
    if (count < num_objectives) {
        auto unit = das_dennis(num_objectives, 1).vectors;
        unit.resize(count);
        return unit;
    }
    std::size_t h = 1;
    while (lattice_size(num_objectives, h + 1) <= count) ++h;
    return das_dennis(num_objectives, h).vectors;
}

// Worst-case (largest) distance function value, which places the minus front.
double dtlz_g_max(const ProblemSpec& spec) {
    const double k = static_cast<double>(spec.distance_params());
    switch (spec.family) {
        case Family::dtlz1:
        case Family::dtlz3: return 100.0 * (k + k * rastrigin_term_max());
        default: return 0.25 * k;
    }
}

std::vector<ObjectiveVector> dtlz_front(const ProblemSpec& spec, std::size_t count) {
    const double g = spec.minus ? dtlz_g_max(spec) : 0.0;
    const double sign = spec.minus ? -1.0 : 1.0;
    auto pts = simplex_points(spec.num_objectives, count);
    for (auto& p : pts) {
        if (spec.family == Family::dtlz1) {
            for (auto& v : p) v = sign * 0.5 * (1.0 + g) * v;
        } else {
            double n = 0.0;
            for (double v : p) n += v * v;
            n = std::sqrt(n);
            for (auto& v : p) v = sign * (1.0 + g) * (v / n);
        }
    }
    return pts;
}

// Shape-driven WFG fronts: the shape over a lattice of directions, or over a
// grid of position parameters followed by a dominance filter.
std::vector<ObjectiveVector> wfg_grid_front(const ProblemSpec& spec, std::size_t count) {
    const std::size_t m_obj = spec.num_objectives;
    const std::size_t dims = m_obj - 1;
    const double target = 4.0 * static_cast<double>(std::max<std::size_t>(count, 1));
    const auto side = static_cast<std::size_t>(std::max(2.0, std::ceil(std::pow(target, 1.0 / dims))));

    std::vector<ObjectiveVector> raw;
    std::vector<std::size_t> digits(dims, 0);
    std::vector<double> x(dims);
    for (;;) {
        for (std::size_t i = 0; i < dims; ++i) x[i] = static_cast<double>(digits[i]) / static_cast<double>(side - 1);
        const auto h = detail::wfg_shape(spec.family, m_obj, x);
        ObjectiveVector f(m_obj);
        for (std::size_t m = 0; m < m_obj; ++m) {
            const double s = 2.0 * static_cast<double>(m + 1) * h[m];
            f[m] = spec.minus ? -(1.0 + s) : s;
        }
        raw.push_back(std::move(f));
        std::size_t i = 0;
        while (i < dims && ++digits[i] == side) digits[i++] = 0;
        if (i == dims) break;
    }

    std::vector<ObjectiveVector> front;
    for (std::size_t idx : nondominated_filter(raw)) front.push_back(raw[idx]);
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());

    if (front.size() > count) {
        std::vector<ObjectiveVector> thinned;
        thinned.reserve(count);
        const double step = static_cast<double>(front.size()) / static_cast<double>(count);
        for (std::size_t j = 0; j < count; ++j) thinned.push_back(front[static_cast<std::size_t>(j * step)]);
        front = std::move(thinned);
    }
    return front;
}

std::vector<ObjectiveVector> wfg_front(const ProblemSpec& spec, std::size_t count) {
    const std::size_t m_obj = spec.num_objectives;
    switch (spec.family) {
        case Family::wfg1:
        case Family::wfg2: return wfg_grid_front(spec, count);
        case Family::wfg3: {
            if (!spec.minus) {
                throw ContractError("wfg3 has no analytic front sampler; supply one with load_reference_file()");
            }
            auto pts = simplex_points(m_obj, count);
            for (auto& p : pts) {
                for (std::size_t m = 0; m < m_obj; ++m) p[m] = -(1.0 + 2.0 * static_cast<double>(m + 1) * p[m]);
            }
            return pts;
        }
        default: {
            auto pts = simplex_points(m_obj, count);
            for (auto& p : pts) {
                double n = 0.0;
                for (double v : p) n += v * v;
                n = std::sqrt(n);
                for (std::size_t m = 0; m < m_obj; ++m) {
                    const double s = 2.0 * static_cast<double>(m + 1) * (p[m] / n);
                    p[m] = spec.minus ? -(1.0 + s) : s;
                }
            }
            return pts;
        }
    }
}

std::pair<ObjectiveVector, ObjectiveVector> bounds_of(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw ContractError("ideal_nadir: empty reference set");
    ObjectiveVector lo = points.front();
    ObjectiveVector hi = points.front();
    for (const auto& p : points) {
        for (std::size_t m = 0; m < lo.size(); ++m) {
            lo[m] = std::min(lo[m], p[m]);
            hi[m] = std::max(hi[m], p[m]);
        }
    }
    for (std::size_t m = 0; m < lo.size(); ++m) {
        if (!(hi[m] > lo[m])) throw ContractError("ideal_nadir: degenerate front along objective " + std::to_string(m + 1));
    }
    return {lo, hi};
}

}  // namespace

bool has_analytic_front(const ProblemSpec& spec) { return !(spec.family == Family::wfg3 && !spec.minus); }

ReferenceSet sample_true_front(const ProblemSpec& spec, std::size_t count) {
    if (count == 0) throw ContractError("sample_true_front: count must be positive");
    if (spec.num_objectives < 2) throw ContractError("sample_true_front: need at least two objectives");
    ReferenceSet out;
    out.source = ReferenceSet::Source::analytic;
    out.points = spec.is_wfg() ? wfg_front(spec, count) : dtlz_front(spec, count);
    return out;
}

ReferenceSet load_reference_file(const std::filesystem::path& path, std::size_t num_objectives) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open reference file: " + path.string());
    ReferenceSet out;
    out.source = ReferenceSet::Source::file;
    out.points = read_real_rows(in, num_objectives);
    if (out.points.empty()) throw ParseError("reference file has no points: " + path.string(), 0);
    return out;
}

std::pair<ObjectiveVector, ObjectiveVector> ideal_nadir(const ProblemSpec& spec) {
    static std::mutex mutex;
    static std::map<std::string, std::pair<ObjectiveVector, ObjectiveVector>> cache;
    const std::string key = spec.name() + "/" + std::to_string(spec.num_objectives) + "/" +
                            std::to_string(spec.position_params()) + "/" + std::to_string(spec.distance_params());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto result = bounds_of(sample_true_front(spec, kDenseSample).points);
    std::lock_guard lock(mutex);
    cache.emplace(key, result);
    return result;
}

std::pair<ObjectiveVector, ObjectiveVector> ideal_nadir(const ReferenceSet& reference) {
    return bounds_of(reference.points);
}

}  // namespace moead
