#pragma once

#include <vector>

#include "moead/core.hpp"
#include "moead/indicators.hpp"

namespace moead {

enum class SelectionMethod { distance, greedy_hv, greedy_igd };

std::string_view selection_name(SelectionMethod method);
SelectionMethod parse_selection(std::string_view name);

/// Starts from one of the M per-objective minimizers (picked at random, ties by
/// lower index), then repeatedly adds the candidate farthest from the selected
/// set. Distances are Euclidean in the candidates' own (raw) space.
std::vector<std::size_t> distance_based_select(const std::vector<ObjectiveVector>& candidates, std::size_t k,
                                               RandomSource& rng);

/// Lazy greedy hypervolume inclusion on normalized candidates with reference
/// point (r, ..., r). Selection order is returned; ties go to the lower index.
std::vector<std::size_t> greedy_hv_select(const std::vector<ObjectiveVector>& normalized, std::size_t k, double r);

/// Same, additionally reporting each accepted marginal contribution.
std::vector<std::size_t> greedy_hv_select(const std::vector<ObjectiveVector>& normalized, std::size_t k, double r,
                                          std::vector<double>* gains);

/// Lazy greedy IGD inclusion: each step adds the candidate that minimizes the
/// IGD of the selection against `reference` (both already normalized).
std::vector<std::size_t> greedy_igd_select(const std::vector<ObjectiveVector>& normalized, std::size_t k,
                                           const std::vector<ObjectiveVector>& reference);

/// Normalizes in `frame` and dispatches. `reference` is needed for greedy_igd only.
std::vector<std::size_t> select_subset(SelectionMethod method, const std::vector<ObjectiveVector>& candidates,
                                       std::size_t k, const HvFrame& frame,
                                       const std::vector<ObjectiveVector>* reference, RandomSource& rng);

/// Indices of the non-dominated archive entries (duplicates kept), ascending.
std::vector<std::size_t> nondominated_archive_indices(const Archive& archive);

}  // namespace moead
