#pragma once

// Pairwise decision procedure for adjacency of d+1 grids: every like-indexed
// difference of initial positions is n-far, and the normalized location
// differences stay away from 0 and 1 in the limit.

#include <cstddef>
#include <utility>
#include <vector>

#include "nadic/grid.hpp"
#include "nadic/report.hpp"

namespace nadic {

// (D1, D2) = (liminf, limsup) of |[L1(j)]_s - [L2(j)]_s| / n^j.
std::pair<Rational, Rational> pair_limits(const GridRepresentation& a, const GridRepresentation& b,
                                          std::size_t axis);

PairDiagnostics pair_diagnostics(const GridSystem& sys, std::size_t k1, std::size_t k2, std::size_t axis);

// Requires exactly d+1 grids.
AdjacencyReport check_adjacent_algebraic(const GridSystem& sys);

// d = 1 only.
bool check_pair_1d(const GridRepresentation& a, const GridRepresentation& b);

// One-dimensional grid made of axis s of rep.
GridRepresentation project(const GridRepresentation& rep, std::size_t axis);

// Requires exactly d+1 grids.
bool check_via_projections(const GridSystem& sys);

// Compares the limits of (a, b) with those of their re-representations.
bool uniformness_check(const GridRepresentation& a, const GridRepresentation& b, std::size_t axis,
                       const std::vector<long>& shift_a, const std::vector<long>& shift_b);

void require_full_system(const GridSystem& sys);

}  // namespace nadic
