#include "nadic/grid.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace nadic {

GridRepresentation::GridRepresentation(int n, int d, Point delta, std::vector<DigitSequence> rows)
    : n_(n), d_(d), delta_(std::move(delta)), rows_(std::move(rows)) {
  if (n_ < 2) throw std::invalid_argument("grid base must be at least 2");
  if (d_ < 1) throw std::invalid_argument("grid dimension must be at least 1");
  const auto dd = static_cast<std::size_t>(d_);
  if (delta_.size() != dd) {
    throw std::invalid_argument("delta has " + std::to_string(delta_.size()) + " entries, expected " +
                                std::to_string(d_));
  }
  if (rows_.size() != dd) {
    throw std::invalid_argument("digit matrix has " + std::to_string(rows_.size()) + " rows, expected " +
                                std::to_string(d_));
  }
  for (const auto& row : rows_) {
    if (row.base() != n_) throw std::invalid_argument("digit row base differs from grid base");
  }
}

std::size_t GridRepresentation::preperiod() const {
  std::size_t pre = 0;
  for (const auto& row : rows_) pre = std::max(pre, row.preperiod().size());
  return pre;
}

std::size_t GridRepresentation::period() const {
  std::size_t p = 1;
  for (const auto& row : rows_) p = lcm_size(p, row.period().size());
  return p;
}

std::vector<int> GridRepresentation::column(std::size_t i) const {
  std::vector<int> col;
  col.reserve(rows_.size());
  for (const auto& row : rows_) col.push_back(row.digit(i));
  return col;
}

QueryCube::QueryCube(Point a, Rational s) : anchor(std::move(a)), side(std::move(s)) {
  if (side.sign() <= 0) throw std::invalid_argument("cube sidelength must be positive, got " + side.to_string());
  if (anchor.empty()) throw std::invalid_argument("cube anchor is empty");
}

GridSystem::GridSystem(std::vector<GridRepresentation> grids) : grids_(std::move(grids)) {
  if (grids_.empty()) throw std::invalid_argument("grid system is empty");
  for (const auto& g : grids_) {
    if (g.n() != grids_.front().n() || g.d() != grids_.front().d()) {
      throw std::invalid_argument("grids in a system must share n and d");
    }
  }
}

GridSystem GridSystem::subsystem(const std::vector<std::size_t>& members) const {
  std::vector<GridRepresentation> out;
  for (std::size_t i : members) out.push_back(grids_.at(i));
  return GridSystem(std::move(out));
}

Rational scale(int n, long m) { return power(Rational(n), -m); }

IntVector location(const GridRepresentation& rep, long j) {
  if (j < 0) throw std::invalid_argument("location index must be nonnegative");
  IntVector out(static_cast<std::size_t>(rep.d()), Integer(0));
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto& row = rep.rows()[s];
    Integer acc = 0;
    for (long i = j - 1; i >= 0; --i) acc = acc * rep.n() + row.digit(static_cast<std::size_t>(i));
    out[s] = acc;
  }
  return out;
}

Point trajectory_point(const GridRepresentation& rep, long j) {
  const IntVector loc = location(rep, j);
  Point p = rep.delta();
  for (std::size_t s = 0; s < p.size(); ++s) p[s] += Rational(loc[s]);
  return p;
}

Point generation_offset(const GridRepresentation& rep, long m) {
  const Rational h = scale(rep.n(), m);
  Point base = m >= 0 ? rep.delta() : trajectory_point(rep, -m);
  for (auto& x : base) x = x.mod(h);
  return base;
}

GridCube cube_containing(const GridRepresentation& rep, const Point& p, long m) {
  if (p.size() != static_cast<std::size_t>(rep.d())) throw std::invalid_argument("point dimension mismatch");
  const Point off = generation_offset(rep, m);
  const Rational h = scale(rep.n(), m);
  GridCube cube;
  cube.level = m;
  cube.side = h;
  for (std::size_t s = 0; s < p.size(); ++s) {
    const Integer k = ((p[s] - off[s]) / h).floor();
    cube.index.push_back(k);
    cube.anchor.push_back(off[s] + Rational(k) * h);
  }
  return cube;
}

bool contains(const QueryCube& outer, const QueryCube& inner) {
  if (outer.anchor.size() != inner.anchor.size()) throw std::invalid_argument("cube dimension mismatch");
  for (std::size_t s = 0; s < outer.anchor.size(); ++s) {
    if (inner.anchor[s] < outer.anchor[s]) return false;
    if (outer.anchor[s] + outer.side < inner.anchor[s] + inner.side) return false;
  }
  return true;
}

bool contains(const GridCube& outer, const QueryCube& inner) { return contains(outer.realize(), inner); }

bool grids_equal(const GridRepresentation& a, const GridRepresentation& b) {
  if (a.n() != b.n() || a.d() != b.d()) throw std::invalid_argument("grids_equal needs matching n and d");
  const auto d = static_cast<std::size_t>(a.d());
  // Nonnegative generations agree iff delta_a - delta_b is an integer vector.
  IntVector z(d);
  for (std::size_t s = 0; s < d; ++s) {
    const Rational diff = a.delta()[s] - b.delta()[s];
    if (!diff.is_integer()) return false;
    z[s] = diff.numerator();
  }
  // Generation -j agrees iff n^j divides D(j) = delta_a - delta_b + L_a(j) - L_b(j).
  // With z_j = D(j)/n^j the recurrence is z_{j+1} = (z_j + a_j - b_j)/n; |z_j|
  // shrinks to at most 1, so the state (z_j, phase) repeats.
  const std::size_t pre = std::max(a.preperiod(), b.preperiod());
  const std::size_t per = lcm_size(a.period(), b.period());
  std::map<std::pair<IntVector, std::size_t>, bool> seen;
  for (std::size_t j = 0;; ++j) {
    if (j >= pre && !seen.emplace(std::make_pair(z, (j - pre) % per), true).second) return true;
    for (std::size_t s = 0; s < d; ++s) {
      const Integer v = z[s] + a.rows()[s].digit(j) - b.rows()[s].digit(j);
      if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(a.n()))) return false;
      z[s] = v / a.n();
    }
  }
}

GridRepresentation alternate_representation(const GridRepresentation& rep, const std::vector<long>& shift) {
  const auto d = static_cast<std::size_t>(rep.d());
  if (shift.size() != d) throw std::invalid_argument("shift dimension mismatch");
  const int n = rep.n();
  Point delta = rep.delta();
  std::vector<DigitSequence> rows;
  for (std::size_t s = 0; s < d; ++s) {
    delta[s] += Rational(shift[s]);
    // Digits of the n-adic integer (sum_i a_i n^i) - shift_s.
    const auto& row = rep.rows()[s];
    const std::size_t pre = row.preperiod().size();
    const std::size_t per = row.period().size();
    std::map<std::pair<long, std::size_t>, std::size_t> seen;
    std::vector<int> digits;
    long carry = -shift[s];
    for (std::size_t i = 0;; ++i) {
      if (i >= pre) {
        auto [it, fresh] = seen.emplace(std::make_pair(carry, (i - pre) % per), i);
        if (!fresh) {
          const auto start = static_cast<long>(it->second);
          rows.emplace_back(n, std::vector<int>(digits.begin(), digits.begin() + start),
                            std::vector<int>(digits.begin() + start, digits.end()));
          break;
        }
      }
      const long v = row.digit(i) + carry;
      long digit = v % n;
      if (digit < 0) digit += n;
      digits.push_back(static_cast<int>(digit));
      carry = (v - digit) / n;
    }
  }
  return GridRepresentation(n, rep.d(), std::move(delta), std::move(rows));
}

}  // namespace nadic
