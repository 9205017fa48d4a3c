#pragma once

#include <span>
#include <vector>

#include "moead/core.hpp"
#include "moead/problems.hpp"

namespace moead {

/// Normalization frame: ideal maps to 0, nadir to 1, reference point (r, ..., r).
struct HvFrame {
    ObjectiveVector ideal;
    ObjectiveVector nadir;
    double r = 1.1;

    static HvFrame from_bounds(const std::pair<ObjectiveVector, ObjectiveVector>& bounds, double r = 1.1);
    /// True ideal and nadir of an analytic front.
    static HvFrame for_problem(const ProblemSpec& spec, double r = 1.1);
    static HvFrame for_reference(const ReferenceSet& reference, double r = 1.1);

    std::size_t num_objectives() const { return ideal.size(); }
};

/// (f - ideal) / (nadir - ideal); throws ContractError on a degenerate axis.
std::vector<ObjectiveVector> normalize_for_indicator(const std::vector<ObjectiveVector>& points,
                                                     const HvFrame& frame);
ObjectiveVector normalize_for_indicator(std::span<const double> point, const HvFrame& frame);

/// Exact hypervolume of the union of boxes [p, (r, ..., r)]. Points with any
/// coordinate >= r are ignored. 2D and 3D use sweeps; higher dimensions slice
/// recursively.
double hypervolume(const std::vector<ObjectiveVector>& points, double r);

/// hypervolume() divided by the reference box volume r^M.
double hypervolume_box_fraction(const std::vector<ObjectiveVector>& points, double r);

/// Hypervolume that `p` adds to `set`: vol([p, r]) - HV({max(p, s)}).
double hv_contribution(std::span<const double> p, const std::vector<ObjectiveVector>& set, double r);

/// Mean distance from each reference point to its nearest point in `points`.
double igd(const std::vector<ObjectiveVector>& points, const std::vector<ObjectiveVector>& reference);

/// Normalizes both sets in `frame` before measuring.
double hypervolume_in_frame(const std::vector<ObjectiveVector>& points, const HvFrame& frame);
double igd_in_frame(const std::vector<ObjectiveVector>& points, const std::vector<ObjectiveVector>& reference,
                    const HvFrame& frame);

}  // namespace moead
