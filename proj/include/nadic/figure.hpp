#pragma once

// Planar pictures of lattices, corner sets and samplings. A figure keeps its
// geometry in exact rationals; SVG output is a rendering of it and the
// sidecar JSON carries the exact values.

#include <string>
#include <vector>

#include "nadic/io.hpp"
#include "nadic/lattice.hpp"

namespace nadic {

struct Segment {
  Point a;
  Point b;
};

// Points and segments are two-dimensional; one-dimensional inputs are placed
// on the horizontal axis.
struct Figure {
  std::string kind;
  Point lo;
  Point hi;
  std::vector<Point> points;
  std::vector<Segment> segments;
};

Figure lattice_figure(int n, const std::vector<Point>& deltas, long m, const QueryCube& box);
Figure corner_figure(int n, const Point& corner, long level);
Figure modulated_figure(const GridRepresentation& rep, long j);
Figure sampling_figure(const std::vector<GridRepresentation>& reps, long j);
Figure trajectory_figure(const GridRepresentation& rep, long horizon);

std::string render_svg(const Figure& fig, int width = 480);
Json sidecar(const Figure& fig);

}  // namespace nadic
