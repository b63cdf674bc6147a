#pragma once

// Cover queries against a grid system, empirical cover constants, and
// explicit cubes that defeat non-adjacent systems.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nadic/grid.hpp"
#include "nadic/report.hpp"

namespace nadic {

struct CoverResult {
  bool found = false;
  std::optional<GridCube> cube;
  std::size_t grid_index = 0;
  Rational ratio;  // side(cube) / side(query), when found
  long start_level = 0;
  long levels_searched = 0;
};

// Largest m with n^{-m} >= side.
long finest_admissible_level(int n, const Rational& side);

// Scans levels m0, m0-1, ..., m0-max_coarsening and, within a level, grids
// in order. Returns the first containing cube.
CoverResult cover_query(const GridSystem& sys, const QueryCube& q, long max_coarsening);

// Side ratio a not-found query is guaranteed to exceed: any covering cube is
// coarser than every searched level.
Rational not_found_lower_bound(int n, const CoverResult& r, const Rational& side);

// Generation offsets precomputed for a level range; answers cover queries
// without recomputing locations. Read-only after construction.
class CoverIndex {
 public:
  CoverIndex(const GridSystem& sys, long lowest_level, long highest_level);

  CoverResult query(const QueryCube& q, long max_coarsening) const;
  const GridSystem& system() const { return sys_; }

 private:
  const Point& offset(std::size_t grid, long level) const;

  GridSystem sys_;
  long lo_;
  long hi_;
  std::vector<std::vector<Point>> offsets_;  // [grid][level - lo]
};

struct EstimateOptions {
  std::vector<long> scales;  // levels m, cubes have side n^{-m} * a/b
  std::size_t samples_per_scale = 200;
  std::uint64_t seed = 0;
  long budget = 8;
  unsigned workers = 1;
};

struct CoverEstimate {
  Rational max_ratio;
  std::size_t samples = 0;
  std::size_t not_found = 0;  // counted at their lower bound
};

// The sample stream is keyed by (seed, scale, index), so the result does not
// depend on the number of workers.
CoverEstimate estimate_cover_constant(const GridSystem& sys, const EstimateOptions& opts);

// The query cube drawn for (seed, level, index).
QueryCube sample_cube(int n, int d, std::uint64_t seed, long level, std::uint64_t index);

enum class WitnessKind { FarFailure, SmallLiminf, LargeLimsup, TooFewGrids };

std::string to_string(WitnessKind kind);
WitnessKind parse_witness_kind(const std::string& text);

struct FailureDescriptor {
  WitnessKind kind = WitnessKind::FarFailure;
  std::size_t k1 = 0;
  std::size_t k2 = 1;
  std::size_t axis = 0;
};

// Descriptor of the first failure of sys; nullopt when the system is adjacent.
std::optional<FailureDescriptor> find_failure(const GridSystem& sys);

struct WitnessCube {
  QueryCube cube;
  Rational guaranteed_ratio;
  WitnessKind kind;
  std::vector<Point> points;  // the points whose hyperplanes block small covers
  long scale_index = 0;       // m1 for far failures, j for the other kinds
};

// Throws std::invalid_argument when the descriptor does not describe a genuine
// failure of sys or N < 1.
WitnessCube witness_nonadjacent(const GridSystem& sys, const FailureDescriptor& failure, long N);

// Budget that scans down to the level where the guarantee bites.
long witness_budget(const GridSystem& sys, const WitnessCube& w);

// cover_query on the witness yields ratio >= N or a not-found whose implied
// lower bound is >= N.
bool verify_witness(const GridSystem& sys, const WitnessCube& w, long budget);

}  // namespace nadic
