#pragma once

// n-adic grids in R^d given by an initial position and a digit matrix.
//
// Generation m consists of the cubes of sidelength n^{-m}. For m >= 0 the
// vertices are delta + k/n^m; for m = -j < 0 they are delta + L(j) + k n^j
// with L(j) = sum_{i<j} n^i a_i, a_i the i-th column of the digit matrix.

#include <cstddef>
#include <vector>

#include "nadic/digits.hpp"
#include "nadic/rational.hpp"

namespace nadic {

using IntVector = std::vector<Integer>;

class GridRepresentation {
 public:
  // Throws std::invalid_argument when n < 2, d < 1, sizes disagree with d,
  // or a row uses a base other than n.
  GridRepresentation(int n, int d, Point delta, std::vector<DigitSequence> rows);

  int n() const { return n_; }
  int d() const { return d_; }
  const Point& delta() const { return delta_; }
  const std::vector<DigitSequence>& rows() const { return rows_; }

  // Longest row preperiod and lcm of row periods.
  std::size_t preperiod() const;
  std::size_t period() const;

  // Column i of the digit matrix.
  std::vector<int> column(std::size_t i) const;

  bool operator==(const GridRepresentation&) const = default;

 private:
  int n_;
  int d_;
  Point delta_;
  std::vector<DigitSequence> rows_;
};

// [a_1, a_1 + side) x ... x [a_d, a_d + side).
struct QueryCube {
  QueryCube(Point anchor, Rational side);  // side must be positive

  Point anchor;
  Rational side;
};

struct GridCube {
  long level = 0;
  IntVector index;
  Point anchor;   // generation offset + index * n^{-level}
  Rational side;  // n^{-level}

  QueryCube realize() const { return QueryCube(anchor, side); }
};

class GridSystem {
 public:
  // Nonempty, all members share (n, d).
  explicit GridSystem(std::vector<GridRepresentation> grids);

  int n() const { return grids_.front().n(); }
  int d() const { return grids_.front().d(); }
  std::size_t size() const { return grids_.size(); }
  const GridRepresentation& operator[](std::size_t i) const { return grids_.at(i); }
  const std::vector<GridRepresentation>& grids() const { return grids_; }

  // Subsystem made of the listed members, in the listed order.
  GridSystem subsystem(const std::vector<std::size_t>& members) const;

 private:
  std::vector<GridRepresentation> grids_;
};

// n^{-m} for any integer m.
Rational scale(int n, long m);

// L(j); throws std::invalid_argument for negative j.
IntVector location(const GridRepresentation& rep, long j);

// delta + L(j).
Point trajectory_point(const GridRepresentation& rep, long j);

// Vertex offset of generation m reduced into [0, n^{-m})^d.
Point generation_offset(const GridRepresentation& rep, long m);

GridCube cube_containing(const GridRepresentation& rep, const Point& p, long m);

bool contains(const QueryCube& outer, const QueryCube& inner);
bool contains(const GridCube& outer, const QueryCube& inner);

// Same vertex sets at every generation. Throws on mismatched (n, d).
bool grids_equal(const GridRepresentation& a, const GridRepresentation& b);

// Representation of the same grid with initial position delta + shift.
GridRepresentation alternate_representation(const GridRepresentation& rep, const std::vector<long>& shift);

}  // namespace nadic
