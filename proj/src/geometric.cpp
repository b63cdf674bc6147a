#include "nadic/geometric.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nadic/algebraic.hpp"
#include "nadic/lattice.hpp"

namespace nadic {

namespace {

// st + eps * h with h a positive infinitesimal. Along a residue class of j,
// P(j) / n^j = U + e n^{-j} exactly, so evaluating the piecewise linear
// distance formulas on (U, e) yields the one-sided limit in its standard part.
struct Dual {
  Rational st;
  Rational eps;

  Dual(Rational s = Rational(0), Rational e = Rational(0)) : st(std::move(s)), eps(std::move(e)) {}

  friend Dual operator-(const Dual& a, const Dual& b) { return {a.st - b.st, a.eps - b.eps}; }
  friend bool operator==(const Dual&, const Dual&) = default;
  friend std::strong_ordering operator<=>(const Dual&, const Dual&) = default;
};

Rational wrap(const Rational& x) { return x.frac(); }

Dual wrap(const Dual& x) {
  const Rational f = x.st.frac();
  if (!f.is_zero() || x.eps.sign() >= 0) return {f, x.eps};
  return {Rational(1), x.eps};
}

Rational magnitude(const Rational& x) { return x.abs(); }

Dual magnitude(const Dual& x) { return x < Dual() ? Dual() - x : x; }

template <class T>
T circular(const T& x) {
  const T f = wrap(x);
  return std::min(f, T(Rational(1)) - f);
}

std::vector<std::vector<std::size_t>> permutations(std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class T>
struct Values {
  T dist;
  T dev;
};

// c: normalized modulated corner offsets of grid i; y[t][s]: normalized
// slice offsets of the t-th other grid. All entries in [0, 1).
template <class T>
Values<T> evaluate(const std::vector<T>& c, const std::vector<std::vector<T>>& y) {
  const std::size_t d = c.size();
  bool degenerate = false;
  for (std::size_t a = 0; a < y.size(); ++a) {
    for (std::size_t b = a + 1; b < y.size(); ++b) {
      for (std::size_t s = 0; s < d; ++s) degenerate = degenerate || y[a][s] == y[b][s];
    }
  }
  Values<T> v{T(Rational(0)), T(Rational(0))};
  if (!degenerate) {
    bool first = true;
    for (const auto& row : y) {
      for (std::size_t s = 0; s < d; ++s) {
        const T g = circular(row[s] - c[s]);
        if (first || g < v.dist) v.dist = g;
        first = false;
      }
    }
  }
  for (const auto& sigma : permutations(d)) {
    bool on_set = false;
    T worst(Rational(0));
    for (std::size_t s = 0; s < d; ++s) {
      const T& ys = y[sigma[s]][s];
      on_set = on_set || ys == c[s];
      worst = std::max(worst, magnitude(ys - c[s]));
    }
    if (!on_set) v.dev = std::max(v.dev, worst);
  }
  return v;
}

// frac(P(j)_s / n^j) as U + e n^{-j}, valid for j at or past the row preperiod.
Dual position_dual(const GridRepresentation& g, std::size_t s, long j) {
  const DigitSequence& row = g.rows()[s];
  const long pre = static_cast<long>(row.preperiod().size());
  const long p = static_cast<long>(row.period().size());
  // L(j) = n^j B(j) - B(0) + sum_{i<pre} (a_i - w_i) n^i, with w the
  // periodic extension of the row.
  Integer head = 0;
  for (long i = pre - 1; i >= 0; --i) {
    long r = (i - pre) % p;
    if (r < 0) r += p;
    head = head * g.n() + (row.digit(static_cast<std::size_t>(i)) - row.period()[static_cast<std::size_t>(r)]);
  }
  const Rational e = g.delta()[s] - backward_limit(row, 0) + Rational(head);
  return wrap(Dual(backward_limit(row, static_cast<std::size_t>(j)), e));
}

Rational position_exact(const GridRepresentation& g, std::size_t s, long j) {
  return (trajectory_point(g, j)[s] / Rational(ipow(g.n(), static_cast<unsigned long>(j)))).frac();
}

template <class T, class F>
Values<T> values_at(const GridSystem& sys, std::size_t i, F position) {
  const auto d = static_cast<std::size_t>(sys.d());
  std::vector<T> c;
  for (std::size_t s = 0; s < d; ++s) c.push_back(position(sys[i], s));
  std::vector<std::vector<T>> y;
  for (std::size_t t = 0; t < sys.size(); ++t) {
    if (t == i) continue;
    std::vector<T> row;
    for (std::size_t s = 0; s < d; ++s) row.push_back(position(sys[t], s));
    y.push_back(std::move(row));
  }
  return evaluate(c, y);
}

long window_start(const GridSystem& sys) {
  std::size_t pre = 0;
  for (const auto& g : sys.grids()) pre = std::max(pre, g.preperiod());
  return std::max<long>(static_cast<long>(pre), 1);
}

long system_period(const GridSystem& sys) {
  std::size_t p = 1;
  for (const auto& g : sys.grids()) p = lcm_size(p, g.period());
  return static_cast<long>(p);
}

}  // namespace

long required_horizon(const GridSystem& sys) { return window_start(sys) + system_period(sys) - 1; }

LargeScaleValues large_scale_values(const GridSystem& sys, std::size_t i, long j) {
  require_full_system(sys);
  if (j < 1) throw std::invalid_argument("large-scale values need j >= 1");
  const auto v = values_at<Rational>(sys, i, [j](const GridRepresentation& g, std::size_t s) {
    return position_exact(g, s, j);
  });
  return {v.dist, v.dev};
}

AdjacencyReport check_adjacent_geometric(const GridSystem& sys) {
  return check_adjacent_geometric(sys, required_horizon(sys));
}

AdjacencyReport check_adjacent_geometric(const GridSystem& sys, long horizon) {
  require_full_system(sys);
  AdjacencyReport report;
  report.checker = "geometric";
  std::vector<Point> deltas;
  for (const auto& g : sys.grids()) deltas.push_back(g.delta());
  if (!is_separated(deltas)) {
    report.failure = Failure{"i", {}, std::nullopt, "initial positions are not separated"};
    return report;
  }
  if (horizon < required_horizon(sys)) {
    throw Inconclusive("horizon " + std::to_string(horizon) + " is below the required " +
                       std::to_string(required_horizon(sys)));
  }
  const long j0 = window_start(sys);
  const long period = system_period(sys);
  report.verdict = true;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    GridDiagnostics gd;
    gd.index = i;
    std::vector<Point> others;
    for (std::size_t t = 0; t < sys.size(); ++t) {
      if (t != i) others.push_back(deltas[t]);
    }
    const auto far = is_n_far_vector(sys.n(), deltas[i], others, 0);
    gd.far = far.far;
    gd.C = far.constant;
    for (long j = j0; j < j0 + period; ++j) {
      const auto v = values_at<Dual>(sys, i, [j](const GridRepresentation& g, std::size_t s) {
        return position_dual(g, s, j);
      });
      if (j == j0 || v.dist.st < gd.liminf) gd.liminf = v.dist.st;
      if (j == j0 || gd.limsup < v.dev.st) gd.limsup = v.dev.st;
    }
    for (long j = 1; j <= horizon; ++j) {
      const auto v = large_scale_values(sys, i, j);
      gd.dist_ratio.push_back(v.dist_ratio);
      gd.dev_ratio.push_back(v.dev_ratio);
    }
    if (report.verdict) {
      if (!gd.far) {
        report.verdict = false;
        report.failure = Failure{"i", {i}, std::nullopt, "initial position is not n-far from the others' lattice"};
      } else if (gd.liminf.sign() <= 0 || gd.limsup >= Rational(1)) {
        report.verdict = false;
        report.failure = Failure{"ii", {i}, std::nullopt, gd.liminf.sign() <= 0 ? "liminf is 0" : "limsup is 1"};
      }
    }
    report.per_grid.push_back(std::move(gd));
  }
  return report;
}

}  // namespace nadic
