#include "nadic/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nadic {

namespace {

void check_dims(const std::vector<Point>& deltas) {
  if (deltas.empty()) return;
  for (const auto& p : deltas) {
    if (p.size() != deltas.front().size()) throw std::invalid_argument("initial positions differ in dimension");
  }
}

// Gap from x to the closure of the interval.
Rational gap(const Interval& iv, const Rational& x) {
  if (x < iv.lo) return iv.lo - x;
  if (x > iv.hi) return x - iv.hi;
  return Rational(0);
}

Rational circular(const Rational& x, const Rational& period) {
  const Rational r = x.mod(period);
  return min(r, period - r);
}

std::vector<std::vector<std::size_t>> permutations(std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void require_separated(const std::vector<Point>& deltas) {
  if (!is_separated(deltas)) throw std::invalid_argument("initial positions are not separated");
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

CornerSet CornerSet::at_level(int n, Point corner, long level) { return {std::move(corner), scale(n, level)}; }

AxisAlignedSet CornerSet::realize() const {
  AxisAlignedSet set;
  for (std::size_t i = 0; i < corner.size(); ++i) {
    Facet f;
    for (std::size_t k = 0; k < corner.size(); ++k) {
      f.push_back(k == i ? Interval::point(corner[k]) : Interval{corner[k], corner[k] + extent});
    }
    set.facets.push_back(std::move(f));
  }
  return set;
}

AxisAlignedSet ModulatedCornerSet::realize() const {
  const Rational side = scale(n, -j);
  AxisAlignedSet set;
  for (std::size_t s = 0; s < offsets.size(); ++s) {
    Facet f;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      f.push_back(k == s ? Interval::point(offsets[k]) : Interval{Rational(0), side});
    }
    set.facets.push_back(std::move(f));
  }
  return set;
}

ModulatedCornerSet modulated_corner_set(const GridRepresentation& rep, long j) {
  require(j >= 0, "modulated corner set needs j >= 0");
  ModulatedCornerSet mc;
  mc.n = rep.n();
  mc.j = j;
  const Rational side = scale(rep.n(), -j);
  for (const auto& c : trajectory_point(rep, j)) mc.offsets.push_back(c.mod(side));
  return mc;
}

Extended<Rational> directional_dist(const AxisAlignedSet& set, const Point& x, std::size_t axis) {
  std::optional<Rational> best;
  for (const auto& f : set.facets) {
    if (f.size() != x.size()) throw std::invalid_argument("facet dimension mismatch");
    bool hit = true;
    for (std::size_t t = 0; t < x.size() && hit; ++t) hit = t == axis || f[t].contains(x[t]);
    if (!hit) continue;
    const Rational g = gap(f[axis], x[axis]);
    if (!best || g < *best) best = g;
  }
  if (!best) return Extended<Rational>::infinite();
  return *best;
}

Extended<Rational> dev(const AxisAlignedSet& set, const Point& x) {
  Extended<Rational> worst = Rational(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto dk = directional_dist(set, x, k);
    if (dk.is_infinite()) return dk;
    if (worst < dk) worst = dk;
  }
  return worst;
}

std::optional<Rational> EuclideanDistance::exact() const {
  const Integer num = squared.numerator();
  const Integer den = squared.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return Rational(a, b);
}

double EuclideanDistance::approx() const { return std::sqrt(squared.to_double()); }

EuclideanDistance dist_point_set(const AxisAlignedSet& set, const Point& x) {
  if (set.facets.empty()) throw std::invalid_argument("distance to an empty set");
  std::optional<Rational> best;
  for (const auto& f : set.facets) {
    if (f.size() != x.size()) throw std::invalid_argument("facet dimension mismatch");
    Rational sq = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
      const Rational g = gap(f[t], x[t]);
      sq += g * g;
    }
    if (!best || sq < *best) best = sq;
  }
  return {*best};
}

bool is_separated(const std::vector<Point>& deltas) {
  check_dims(deltas);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    for (std::size_t j = i + 1; j < deltas.size(); ++j) {
      for (std::size_t k = 0; k < deltas[i].size(); ++k) {
        if ((deltas[i][k] - deltas[j][k]).is_integer()) return false;
      }
    }
  }
  return true;
}

bool is_level_degenerate(int n, const std::vector<Point>& deltas, long m) {
  check_dims(deltas);
  const Rational inv = power(Rational(n), m);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    for (std::size_t j = i + 1; j < deltas.size(); ++j) {
      for (std::size_t k = 0; k < deltas[i].size(); ++k) {
        if (((deltas[i][k] - deltas[j][k]) * inv).is_integer()) return true;
      }
    }
  }
  return false;
}

std::vector<Point> small_scale_lattice_points(int n, const std::vector<Point>& deltas, long m, const QueryCube& box) {
  require(m >= 0, "small-scale lattice needs m >= 0");
  require(!deltas.empty(), "small-scale lattice needs initial positions");
  const std::size_t d = deltas.front().size();
  require(deltas.size() == d, "small-scale lattice needs d initial positions");
  require(box.anchor.size() == d, "box dimension mismatch");
  require_separated(deltas);
  require(!is_level_degenerate(n, deltas, m), "initial positions share a boundary hyperplane at this level");

  const Rational h = scale(n, m);
  std::set<Point> merged;
  for (const auto& sigma : permutations(d)) {
    // Lattice offset + h Z^d, coordinates listed per axis inside the box.
    std::vector<std::vector<Rational>> coords(d);
    for (std::size_t k = 0; k < d; ++k) {
      const Rational c = deltas[sigma[k]][k];
      const Rational lo = box.anchor[k];
      const Rational hi = box.anchor[k] + box.side;
      for (Integer t = ((lo - c) / h).ceil(); c + Rational(t) * h < hi; ++t) coords[k].push_back(c + Rational(t) * h);
    }
    if (std::any_of(coords.begin(), coords.end(), [](const auto& v) { return v.empty(); })) continue;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      Point p(d);
      for (std::size_t k = 0; k < d; ++k) p[k] = coords[k][idx[k]];
      merged.insert(std::move(p));
      std::size_t k = 0;
      while (k < d && ++idx[k] == coords[k].size()) idx[k++] = 0;
      if (k == d) break;
    }
  }
  return {merged.begin(), merged.end()};
}

Rational dist_boundary_to_lattice(int n, const Point& delta, const std::vector<Point>& deltas, long m) {
  require(m >= 0, "small-scale lattice needs m >= 0");
  require(!deltas.empty() && deltas.size() == delta.size(), "lattice needs d initial positions");
  require_separated(deltas);
  if (is_level_degenerate(n, deltas, m)) return Rational(0);
  // Every (member, axis) pair occurs in some permutation, so the minimum over
  // lattice residues and axes runs over all like-indexed differences.
  const Rational h = scale(n, m);
  std::optional<Rational> best;
  for (const auto& other : deltas) {
    for (std::size_t s = 0; s < delta.size(); ++s) {
      const Rational g = circular(other[s] - delta[s], h);
      if (!best || g < *best) best = g;
    }
  }
  return *best;
}

FarVectorResult is_n_far_vector(int n, const Point& delta, const std::vector<Point>& deltas, long max_level) {
  require(!deltas.empty() && deltas.size() == delta.size(), "n-far vector needs d initial positions");
  require_separated(deltas);
  FarVectorResult r;
  for (long m = 0; m <= max_level; ++m) {
    r.scaled.push_back(power(Rational(n), m) * dist_boundary_to_lattice(n, delta, deltas, m));
  }
  // A like-indexed difference among the others that is n-adic degenerates
  // some level to distance 0.
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    for (std::size_t j = i + 1; j < deltas.size(); ++j) {
      for (std::size_t k = 0; k < delta.size(); ++k) {
        if (is_n_adic(deltas[i][k] - deltas[j][k], n)) return r;
      }
    }
  }
  std::optional<Rational> c;
  for (const auto& other : deltas) {
    for (std::size_t s = 0; s < delta.size(); ++s) {
      const Rational f = far_infimum(other[s] - delta[s], n);
      if (!c || f < *c) c = f;
    }
  }
  if (c->sign() > 0) {
    r.far = true;
    r.constant = c;
  }
  return r;
}

LargeScaleSampling large_scale_sampling(const std::vector<GridRepresentation>& reps, long j) {
  require(j >= 1, "large-scale sampling needs j >= 1");
  require(!reps.empty(), "large-scale sampling needs grids");
  const std::size_t d = static_cast<std::size_t>(reps.front().d());
  require(reps.size() == d, "large-scale sampling needs d grids");
  std::vector<Point> deltas;
  for (const auto& r : reps) {
    require(r.n() == reps.front().n() && r.d() == reps.front().d(), "grids must share n and d");
    deltas.push_back(r.delta());
  }
  require_separated(deltas);

  LargeScaleSampling out;
  out.n = reps.front().n();
  out.j = j;
  std::vector<Point> slices;
  for (const auto& r : reps) slices.push_back(modulated_corner_set(r, j).offsets);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      for (std::size_t k = 0; k < d; ++k) out.degenerate = out.degenerate || slices[a][k] == slices[b][k];
    }
  }
  std::set<Point> merged;
  for (const auto& sigma : permutations(d)) {
    Point p(d);
    for (std::size_t s = 0; s < d; ++s) p[s] = slices[sigma[s]][s];
    merged.insert(std::move(p));
  }
  out.points.assign(merged.begin(), merged.end());
  return out;
}

}  // namespace nadic
