#include "nadic/figure.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nadic {

namespace {

std::size_t check_planar(std::size_t d) {
  if (d != 1 && d != 2) throw std::invalid_argument("figures support d = 1 or d = 2, got d = " + std::to_string(d));
  return d;
}

Point lift(const Point& p) {
  if (p.size() == 2) return p;
  return {p[0], Rational(0)};
}

// Hyperplanes {y_axis = c + k h} meeting [lo, hi), clipped to the box.
void add_slices(Figure& fig, std::size_t d, std::size_t axis, const Rational& c, const Rational& h,
                const Point& lo, const Point& hi) {
  for (Integer k = ((lo[axis] - c) / h).ceil(); c + Rational(k) * h < hi[axis]; ++k) {
    const Rational x = c + Rational(k) * h;
    if (d == 1) {
      fig.points.push_back({x, Rational(0)});
      continue;
    }
    Point a = lo;
    Point b = hi;
    a[axis] = x;
    b[axis] = x;
    fig.segments.push_back({a, b});
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

Figure lattice_figure(int n, const std::vector<Point>& deltas, long m, const QueryCube& box) {
  const std::size_t d = check_planar(box.anchor.size());
  Figure fig;
  fig.kind = "lattice";
  fig.lo = box.anchor;
  for (const auto& a : box.anchor) fig.hi.push_back(a + box.side);
  const Rational h = scale(n, m);
  for (const auto& p : small_scale_lattice_points(n, deltas, m, box)) fig.points.push_back(lift(p));
  if (d == 2) {
    for (const auto& delta : deltas) {
      for (std::size_t s = 0; s < d; ++s) add_slices(fig, d, s, delta[s], h, fig.lo, fig.hi);
    }
  }
  fig.lo = lift(fig.lo);
  fig.hi = lift(fig.hi);
  return fig;
}

Figure corner_figure(int n, const Point& corner, long level) {
  const std::size_t d = check_planar(corner.size());
  const CornerSet cs = CornerSet::at_level(n, corner, level);
  Figure fig;
  fig.kind = "corner";
  if (d == 1) {
    fig.points.push_back(lift(corner));
  } else {
    for (std::size_t free = 0; free < 2; ++free) {
      Point b = corner;
      b[free] += cs.extent;
      fig.segments.push_back({corner, b});
    }
  }
  for (std::size_t s = 0; s < d; ++s) {
    fig.lo.push_back(corner[s]);
    fig.hi.push_back(corner[s] + cs.extent);
  }
  fig.lo = lift(fig.lo);
  fig.hi = lift(fig.hi);
  return fig;
}

Figure modulated_figure(const GridRepresentation& rep, long j) {
  const std::size_t d = check_planar(static_cast<std::size_t>(rep.d()));
  const ModulatedCornerSet mc = modulated_corner_set(rep, j);
  const Rational side = scale(rep.n(), -j);
  Figure fig;
  fig.kind = "modulated";
  fig.lo = Point(d, Rational(0));
  fig.hi = Point(d, side);
  for (std::size_t s = 0; s < d; ++s) add_slices(fig, d, s, mc.offsets[s], side, fig.lo, fig.hi);
  fig.lo = lift(fig.lo);
  fig.hi = lift(fig.hi);
  return fig;
}

Figure sampling_figure(const std::vector<GridRepresentation>& reps, long j) {
  const LargeScaleSampling sample = large_scale_sampling(reps, j);
  const std::size_t d = check_planar(static_cast<std::size_t>(reps.front().d()));
  const Rational side = scale(reps.front().n(), -j);
  Figure fig;
  fig.kind = "sampling";
  fig.lo = Point(d, Rational(0));
  fig.hi = Point(d, side);
  if (d == 2) {
    for (const auto& r : reps) {
      const ModulatedCornerSet mc = modulated_corner_set(r, j);
      for (std::size_t s = 0; s < d; ++s) add_slices(fig, d, s, mc.offsets[s], side, fig.lo, fig.hi);
    }
  }
  for (const auto& p : sample.points) fig.points.push_back(lift(p));
  fig.lo = lift(fig.lo);
  fig.hi = lift(fig.hi);
  return fig;
}

Figure trajectory_figure(const GridRepresentation& rep, long horizon) {
  check_planar(static_cast<std::size_t>(rep.d()));
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  Figure fig;
  fig.kind = "trajectory";
  for (long j = 0; j <= horizon; ++j) fig.points.push_back(lift(trajectory_point(rep, j)));
  fig.lo = fig.points.front();
  fig.hi = fig.points.front();
  for (const auto& p : fig.points) {
    for (std::size_t s = 0; s < 2; ++s) {
      fig.lo[s] = min(fig.lo[s], p[s]);
      fig.hi[s] = max(fig.hi[s], p[s]);
    }
  }
  for (std::size_t s = 0; s < 2; ++s) {
    if (fig.lo[s] == fig.hi[s]) fig.hi[s] += Rational(1);
  }
  for (std::size_t k = 1; k < fig.points.size(); ++k) fig.segments.push_back({fig.points[k - 1], fig.points[k]});
  return fig;
}

std::string render_svg(const Figure& fig, int width) {
  const double pad = 24;
  const double w = width;
  const double span_x = (fig.hi[0] - fig.lo[0]).to_double();
  const double span_y = (fig.hi[1] - fig.lo[1]).to_double();
  const double span = std::max(span_x, span_y) > 0 ? std::max(span_x, span_y) : 1.0;
  const double k = (w - 2 * pad) / span;
  auto X = [&](const Rational& x) { return pad + (x - fig.lo[0]).to_double() * k; };
  auto Y = [&](const Rational& y) { return w - pad - (y - fig.lo[1]).to_double() * k; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << width
      << "\" viewBox=\"0 0 " << width << ' ' << width << "\">\n";
  out << "<rect x=\"" << num(X(fig.lo[0])) << "\" y=\"" << num(Y(fig.hi[1])) << "\" width=\"" << num(span_x * k)
      << "\" height=\"" << num(span_y * k) << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  for (const auto& s : fig.segments) {
    out << "<line x1=\"" << num(X(s.a[0])) << "\" y1=\"" << num(Y(s.a[1])) << "\" x2=\"" << num(X(s.b[0]))
        << "\" y2=\"" << num(Y(s.b[1])) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& p : fig.points) {
    out << "<circle cx=\"" << num(X(p[0])) << "\" cy=\"" << num(Y(p[1])) << "\" r=\"3\" fill=\"green\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Json sidecar(const Figure& fig) {
  Json pts = Json::array();
  for (const auto& p : fig.points) pts.push_back(to_json(p));
  Json segs = Json::array();
  for (const auto& s : fig.segments) segs.push_back({to_json(s.a), to_json(s.b)});
  return {{"kind", fig.kind},
          {"box", {{"lo", to_json(fig.lo)}, {"hi", to_json(fig.hi)}}},
          {"points", pts},
          {"segments", segs}};
}

}  // namespace nadic
