#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nadic/rational.hpp"

namespace nadic {

// Raised when a finite horizon cannot settle a limit.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per pair of grids and axis. Indices are 0-based.
struct PairDiagnostics {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t axis = 0;
  bool far = false;
  std::optional<Rational> C;
  Rational D1;
  Rational D2;
};

// Per grid i against the remaining d grids.
struct GridDiagnostics {
  std::size_t index = 0;
  bool far = false;
  std::optional<Rational> C;
  Rational liminf;  // of dist(mC_i(j), S(j)) / n^j
  Rational limsup;  // of max_y dev(mC_i(j), y) / n^j
  std::vector<Rational> dist_ratio;  // j = 1..horizon
  std::vector<Rational> dev_ratio;
};

struct Failure {
  // "1" / "2" for the pairwise conditions, "i" / "ii" for the lattice
  // conditions, "separated" for coinciding coordinates mod 1.
  std::string condition;
  std::vector<std::size_t> grids;
  std::optional<std::size_t> axis;
  std::string detail;
};

struct AdjacencyReport {
  std::string checker;
  bool verdict = false;
  std::vector<PairDiagnostics> pairs;
  std::vector<GridDiagnostics> per_grid;
  std::optional<Failure> failure;
};

}  // namespace nadic
