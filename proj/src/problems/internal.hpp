#pragma once

#include <span>
#include <vector>

#include "moead/problems.hpp"

namespace moead::detail {

void evaluate_dtlz(Family family, std::size_t num_objectives, std::size_t k, std::span<const double> x,
                   std::span<double> out);

void evaluate_wfg(Family family, std::size_t num_objectives, std::size_t k, std::size_t l, std::span<const double> z,
                  std::span<double> out);

/// WFG shape vector h(x) for position parameters x in [0,1]^(M-1).
std::vector<double> wfg_shape(Family family, std::size_t num_objectives, std::span<const double> x);

}  // namespace moead::detail
