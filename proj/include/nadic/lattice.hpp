#pragma once

// Point sets cut out by grid boundaries, and exact distances to unions of
// axis-aligned facets.

#include <cstddef>
#include <optional>
#include <vector>

#include "nadic/extended.hpp"
#include "nadic/grid.hpp"

namespace nadic {

// A single point when lo == hi, otherwise [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return is_point() ? x == lo : (lo <= x && x < hi); }
};

using Facet = std::vector<Interval>;

struct AxisAlignedSet {
  std::vector<Facet> facets;
};

// The d facets {y_i = x_i} x prod_{k != i} [x_k, x_k + extent) around corner x.
struct CornerSet {
  Point corner;
  Rational extent;

  static CornerSet at_level(int n, Point corner, long level);
  AxisAlignedSet realize() const;
};

// Generation -j boundary of a grid inside [0, n^j)^d: one slice per axis.
struct ModulatedCornerSet {
  int n = 2;
  long j = 0;
  Point offsets;

  AxisAlignedSet realize() const;
};

ModulatedCornerSet modulated_corner_set(const GridRepresentation& rep, long j);

// inf |t| with x + t e_axis in the set; infinite when the line misses it.
Extended<Rational> directional_dist(const AxisAlignedSet& set, const Point& x, std::size_t axis);

// max over axes of directional_dist.
Extended<Rational> dev(const AxisAlignedSet& set, const Point& x);

struct EuclideanDistance {
  Rational squared;

  // The distance itself when it is rational.
  std::optional<Rational> exact() const;
  double approx() const;
};

// Infimum of the Euclidean distance; throws on an empty set.
EuclideanDistance dist_point_set(const AxisAlignedSet& set, const Point& x);

// Like-indexed coordinates pairwise distinct mod 1.
bool is_separated(const std::vector<Point>& deltas);

// Some like-indexed pair differs by a multiple of n^{-m}: the boundaries then
// share a hyperplane and their intersection contains lines.
bool is_level_degenerate(int n, const std::vector<Point>& deltas, long m);

// Intersection of the generation-m boundaries of the given d initial positions
// inside box, sorted. Rejects non-separated or level-degenerate input.
std::vector<Point> small_scale_lattice_points(int n, const std::vector<Point>& deltas, long m, const QueryCube& box);

// Distance from the generation-m boundary of delta to the small-scale lattice
// of deltas at level m.
Rational dist_boundary_to_lattice(int n, const Point& delta, const std::vector<Point>& deltas, long m);

struct FarVectorResult {
  bool far = false;
  std::optional<Rational> constant;  // inf_m n^m dist, when positive
  std::vector<Rational> scaled;      // n^m dist for m = 0..max_level
};

FarVectorResult is_n_far_vector(int n, const Point& delta, const std::vector<Point>& deltas, long max_level);

struct LargeScaleSampling {
  int n = 2;
  long j = 1;
  std::vector<Point> points;  // sorted, in [0, n^j)^d
  bool degenerate = false;    // two members share a slice; the intersection has lines
};

// One candidate point per assignment of members to axes.
LargeScaleSampling large_scale_sampling(const std::vector<GridRepresentation>& reps, long j);

}  // namespace nadic
