#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <numeric>

#include "moead/indicators.hpp"

namespace moead {

HvFrame HvFrame::from_bounds(const std::pair<ObjectiveVector, ObjectiveVector>& bounds, double r) {
    if (bounds.first.size() != bounds.second.size()) throw ContractError("HvFrame: ideal and nadir differ in length");
    for (std::size_t m = 0; m < bounds.first.size(); ++m) {
        if (!(bounds.second[m] > bounds.first[m])) throw ContractError("HvFrame: degenerate axis");
    }
    return HvFrame{bounds.first, bounds.second, r};
}

HvFrame HvFrame::for_problem(const ProblemSpec& spec, double r) { return from_bounds(ideal_nadir(spec), r); }

HvFrame HvFrame::for_reference(const ReferenceSet& reference, double r) {
    return from_bounds(ideal_nadir(reference), r);
}

ObjectiveVector normalize_for_indicator(std::span<const double> point, const HvFrame& frame) {
    const std::size_t m_obj = frame.num_objectives();
    if (point.size() != m_obj) throw ContractError("normalize_for_indicator: point and frame differ in length");
    ObjectiveVector out(m_obj);
    for (std::size_t m = 0; m < m_obj; ++m) {
        const double span = frame.nadir[m] - frame.ideal[m];
        if (!(span > 0.0)) throw ContractError("normalize_for_indicator: degenerate axis");
        out[m] = (point[m] - frame.ideal[m]) / span;
    }
    return out;
}

std::vector<ObjectiveVector> normalize_for_indicator(const std::vector<ObjectiveVector>& points,
                                                     const HvFrame& frame) {
    std::vector<ObjectiveVector> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(normalize_for_indicator(p, frame));
    return out;
}

namespace {

using Pts = std::vector<const double*>;

double hv1(const Pts& pts, double r) {
    double best = r;
    for (const double* p : pts) best = std::min(best, p[0]);
    return r - best;
}

double hv2(Pts pts, double r) {
    std::sort(pts.begin(), pts.end(), [](const double* a, const double* b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    double area = 0.0;
    double y_bound = r;
    for (const double* p : pts) {
        if (p[1] < y_bound) {
            area += (r - p[0]) * (y_bound - p[1]);
            y_bound = p[1];
        }
    }
    return area;
}

// Sweep along the third axis keeping a 2D staircase (x ascending, y descending)
// and the area it dominates.
double hv3(Pts pts, double r) {
    std::sort(pts.begin(), pts.end(), [](const double* a, const double* b) { return a[2] < b[2]; });
    std::map<double, double> stair;
    double area = 0.0;
    double volume = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double px = pts[i][0];
        const double py = pts[i][1];
        auto ub = stair.upper_bound(px);
        const bool covered = ub != stair.begin() && std::prev(ub)->second <= py;
        if (!covered) {
            auto it = stair.lower_bound(px);
            double u = it == stair.begin() ? r : std::prev(it)->second;
            double x_cur = px;
            while (it != stair.end() && it->second >= py) {
                area += (it->first - x_cur) * (u - py);
                x_cur = it->first;
                u = it->second;
                it = stair.erase(it);
            }
            const double x_end = it == stair.end() ? r : it->first;
            area += (x_end - x_cur) * (u - py);
            stair.emplace_hint(it, px, py);
        }
        const double z_next = i + 1 < pts.size() ? pts[i + 1][2] : r;
        volume += area * (z_next - pts[i][2]);
    }
    return volume;
}

double hv_recursive(Pts pts, std::size_t dim, double r) {
    if (pts.empty()) return 0.0;
    if (dim == 1) return hv1(pts, r);
    if (dim == 2) return hv2(std::move(pts), r);
    if (dim == 3) return hv3(std::move(pts), r);
    const std::size_t last = dim - 1;
    std::sort(pts.begin(), pts.end(), [last](const double* a, const double* b) { return a[last] < b[last]; });
    double volume = 0.0;
    Pts prefix;
    prefix.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        prefix.push_back(pts[i]);
        const double z_next = i + 1 < pts.size() ? pts[i + 1][last] : r;
        const double depth = z_next - pts[i][last];
        if (depth > 0.0) volume += hv_recursive(prefix, last, r) * depth;
    }
    return volume;
}

}  // namespace

double hypervolume(const std::vector<ObjectiveVector>& points, double r) {
    if (points.empty()) return 0.0;
    const std::size_t dim = points.front().size();
    if (dim == 0) throw ContractError("hypervolume: zero-dimensional points");
    Pts inside;
    inside.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != dim) throw ContractError("hypervolume: ragged point set");
        if (std::all_of(p.begin(), p.end(), [r](double v) { return v < r; })) inside.push_back(p.data());
    }
    return hv_recursive(std::move(inside), dim, r);
}

double hypervolume_box_fraction(const std::vector<ObjectiveVector>& points, double r) {
    if (points.empty()) return 0.0;
    return hypervolume(points, r) / std::pow(r, static_cast<double>(points.front().size()));
}

double hv_contribution(std::span<const double> p, const std::vector<ObjectiveVector>& set, double r) {
    double box = 1.0;
    for (double v : p) {
        if (!(v < r)) return 0.0;
        box *= r - v;
    }
    std::vector<ObjectiveVector> clipped;
    clipped.reserve(set.size());
    for (const auto& s : set) {
        if (s.size() != p.size()) throw ContractError("hv_contribution: dimension mismatch");
        ObjectiveVector q(p.size());
        for (std::size_t m = 0; m < p.size(); ++m) q[m] = std::max(p[m], s[m]);
        clipped.push_back(std::move(q));
    }
    return box - hypervolume(clipped, r);
}

double hypervolume_in_frame(const std::vector<ObjectiveVector>& points, const HvFrame& frame) {
    return hypervolume(normalize_for_indicator(points, frame), frame.r);
}

}  // namespace moead
