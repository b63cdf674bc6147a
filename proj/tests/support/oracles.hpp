#pragma once

// Brute-force reference computations for the tests. They work straight from
// the definitions (digit by digit, cube by cube) and share no code with the
// library beyond Rational and the plain data types.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "nadic/cover.hpp"
#include "nadic/grid.hpp"

namespace oracle {

using nadic::Integer;
using nadic::Point;
using nadic::Rational;

inline Rational pow_n(int n, long e) {
  Rational r(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= Rational(n);
  return e < 0 ? Rational(1) / r : r;
}

// First k base-n digits of x in [0, 1): floor(x n^i) mod n.
inline std::vector<int> digits(const Rational& x, int n, std::size_t k) {
  std::vector<int> out;
  Rational t = x;
  for (std::size_t i = 0; i < k; ++i) {
    t *= Rational(n);
    const Integer d = t.floor();
    out.push_back(static_cast<int>(d.get_si()));
    t -= Rational(d);
  }
  return out;
}

inline std::size_t max_tie_run(const std::vector<int>& ds, int n) {
  std::size_t best = 0, run0 = 0, run1 = 0;
  for (int d : ds) {
    run0 = d == 0 ? run0 + 1 : 0;
    run1 = d == n - 1 ? run1 + 1 : 0;
    best = std::max({best, run0, run1});
  }
  return best;
}

// sum_{i<j} c_i n^i / n^j, summed term by term.
template <class Seq>
Rational normalized_sum(const Seq& c, long j) {
  Rational acc(0);
  for (long i = 0; i < j; ++i) acc += Rational(c.digit(static_cast<std::size_t>(i))) * pow_n(c.base(), i);
  return acc / pow_n(c.base(), j);
}

// L(j) by direct summation.
inline std::vector<Integer> location(const nadic::GridRepresentation& g, long j) {
  std::vector<Integer> out;
  for (const auto& row : g.rows()) {
    Integer acc = 0;
    Integer p = 1;
    for (long i = 0; i < j; ++i) {
      acc += p * row.digit(static_cast<std::size_t>(i));
      p *= g.n();
    }
    out.push_back(acc);
  }
  return out;
}

// Some vertex of generation m, straight from the definition.
inline Point vertex(const nadic::GridRepresentation& g, long m) {
  Point v = g.delta();
  if (m < 0) {
    const auto loc = oracle::location(g, -m);
    for (std::size_t s = 0; s < v.size(); ++s) v[s] += Rational(loc[s]);
  }
  return v;
}

// x == v (mod h) coordinatewise test along one axis.
inline bool congruent(const Rational& x, const Rational& v, const Rational& h) {
  return ((x - v) / h).is_integer();
}

// Vertex sets agree at generations |m| <= window.
inline bool same_grid_window(const nadic::GridRepresentation& a, const nadic::GridRepresentation& b, long window) {
  for (long m = -window; m <= window; ++m) {
    const Rational h = pow_n(a.n(), -m);
    const Point va = vertex(a, m);
    const Point vb = vertex(b, m);
    for (std::size_t s = 0; s < va.size(); ++s) {
      if (!congruent(va[s], vb[s], h)) return false;
    }
  }
  return true;
}

// Intersection of the generation-m boundaries of each delta inside the box:
// candidate coordinates per axis are all boundary hyperplanes of all deltas,
// and a candidate survives when it lies on every boundary.
inline std::vector<Point> lattice_points(int n, const std::vector<Point>& deltas, long m, const nadic::QueryCube& box) {
  const std::size_t d = box.anchor.size();
  const Rational h = pow_n(n, -m);
  std::vector<std::vector<Rational>> axis_coords(d);
  for (std::size_t s = 0; s < d; ++s) {
    std::set<Rational> cs;
    for (const auto& delta : deltas) {
      Rational c = delta[s];
      while (c >= box.anchor[s]) c -= h;
      while (c < box.anchor[s]) c += h;
      for (; c < box.anchor[s] + box.side; c += h) cs.insert(c);
    }
    axis_coords[s].assign(cs.begin(), cs.end());
  }
  std::vector<Point> out;
  std::vector<std::size_t> idx(d, 0);
  if (std::any_of(axis_coords.begin(), axis_coords.end(), [](const auto& v) { return v.empty(); })) return out;
  while (true) {
    Point p(d);
    for (std::size_t s = 0; s < d; ++s) p[s] = axis_coords[s][idx[s]];
    const bool on_all = std::all_of(deltas.begin(), deltas.end(), [&](const Point& delta) {
      for (std::size_t s = 0; s < d; ++s) {
        if (congruent(p[s], delta[s], h)) return true;
      }
      return false;
    });
    if (on_all) out.push_back(p);
    std::size_t s = 0;
    while (s < d && ++idx[s] == axis_coords[s].size()) idx[s++] = 0;
    if (s == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverHit {
  long level;
  std::size_t grid;
  Point anchor;
};

// Every cube of every grid whose anchor lies within one cell of the query's
// anchor, at every level of the budget; first hit at the finest level, lowest
// grid index.
inline std::optional<CoverHit> cover(const nadic::GridSystem& sys, const nadic::QueryCube& q, long m0, long budget) {
  const std::size_t d = q.anchor.size();
  for (long m = m0; m >= m0 - budget; --m) {
    const Rational h = pow_n(sys.n(), -m);
    for (std::size_t g = 0; g < sys.size(); ++g) {
      const Point v = vertex(sys[g], m);
      bool inside = true;
      Point anchor(d);
      for (std::size_t s = 0; s < d && inside; ++s) {
        // Candidate cells k with v + k h near the query anchor.
        Integer k0 = ((q.anchor[s] - v[s]) / h).floor();
        bool any = false;
        for (Integer k = k0 - 1; k <= k0 + 1 && !any; ++k) {
          const Rational a = v[s] + Rational(k) * h;
          if (a <= q.anchor[s] && q.anchor[s] + q.side <= a + h) {
            any = true;
            anchor[s] = a;
          }
        }
        inside = any;
      }
      if (inside) return CoverHit{m, g, anchor};
    }
  }
  return std::nullopt;
}

inline long admissible_level(int n, const Rational& side) {
  long m = -200;
  while (pow_n(n, -(m + 1)) >= side) ++m;
  return m;
}

// Distance on the circle of circumference 1.
inline Rational circle(const Rational& x) {
  const Rational f = x - Rational(x.floor());
  return nadic::min(f, Rational(1) - f);
}

// Condition-(ii) raw values for grid i at scale j: the sampling is found by
// intersecting slices of the other grids over all axis combinations, the
// distance is taken on the torus of side n^j and the deviation in the plain
// box metric.
inline std::pair<Rational, Rational> large_scale(const nadic::GridSystem& sys, std::size_t i, long j) {
  const std::size_t d = static_cast<std::size_t>(sys.d());
  const Rational side = pow_n(sys.n(), j);
  auto slice = [&](std::size_t g, std::size_t s) {
    Rational c = vertex(sys[g], -j)[s];
    c = c - Rational((c / side).floor()) * side;
    return c;
  };
  std::vector<std::size_t> others;
  for (std::size_t t = 0; t < sys.size(); ++t) {
    if (t != i) others.push_back(t);
  }
  Point corner(d);
  for (std::size_t s = 0; s < d; ++s) corner[s] = slice(i, s);
  // Points of the box lying on every other grid's slices: one coordinate per
  // axis chosen among the slice offsets.
  std::set<Point> sampling;
  std::vector<std::size_t> pick(d, 0);
  bool lines = false;
  while (true) {
    Point p(d);
    for (std::size_t s = 0; s < d; ++s) p[s] = slice(others[pick[s]], s);
    const bool on_all = std::all_of(others.begin(), others.end(), [&](std::size_t g) {
      for (std::size_t s = 0; s < d; ++s) {
        if (p[s] == slice(g, s)) return true;
      }
      return false;
    });
    if (on_all) sampling.insert(p);
    std::size_t s = 0;
    while (s < d && ++pick[s] == others.size()) pick[s++] = 0;
    if (s == d) break;
  }
  for (std::size_t a = 0; a < others.size(); ++a) {
    for (std::size_t b = a + 1; b < others.size(); ++b) {
      for (std::size_t s = 0; s < d; ++s) lines = lines || slice(others[a], s) == slice(others[b], s);
    }
  }
  std::optional<Rational> dist;
  Rational dev(0);
  for (const auto& y : sampling) {
    bool on_set = false;
    Rational worst(0);
    for (std::size_t s = 0; s < d; ++s) {
      const Rational g = circle((y[s] - corner[s]) / side);
      if (!dist || g < *dist) dist = g;
      on_set = on_set || y[s] == corner[s];
      worst = nadic::max(worst, (y[s] - corner[s]).abs() / side);
    }
    if (!on_set) dev = nadic::max(dev, worst);
  }
  if (lines) dist = Rational(0);
  return {*dist, dev};
}

}  // namespace oracle
