#pragma once

// Lattice formulation of adjacency: each initial position is n-far from the
// small-scale lattice of the others, and each modulated corner set keeps
// normalized distance and deviation from the others' large-scale sampling
// away from 0 and 1 respectively.

#include <cstddef>

#include "nadic/grid.hpp"
#include "nadic/report.hpp"

namespace nadic {

// Smallest horizon for which the limits are determined: max(preperiod, 1)
// plus one full period of the system, minus one.
long required_horizon(const GridSystem& sys);

// Requires d+1 grids. Throws Inconclusive when horizon < required_horizon(sys)
// and the positions are separated. Raw per-j ratios are reported for
// j = 1..horizon.
AdjacencyReport check_adjacent_geometric(const GridSystem& sys, long horizon);

// As above with horizon = required_horizon(sys).
AdjacencyReport check_adjacent_geometric(const GridSystem& sys);

struct LargeScaleValues {
  Rational dist_ratio;  // torus distance / n^j
  Rational dev_ratio;   // max over sampling points of dev / n^j
};

// Values of the second condition for grid i at one j >= 1.
LargeScaleValues large_scale_values(const GridSystem& sys, std::size_t i, long j);

}  // namespace nadic
