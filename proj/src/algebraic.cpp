#include "nadic/algebraic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace nadic {

void require_full_system(const GridSystem& sys) {
  if (sys.size() != static_cast<std::size_t>(sys.d()) + 1) {
    throw std::invalid_argument("adjacency needs d+1 = " + std::to_string(sys.d() + 1) + " grids, got " +
                                std::to_string(sys.size()));
  }
}

std::pair<Rational, Rational> pair_limits(const GridRepresentation& a, const GridRepresentation& b,
                                          std::size_t axis) {
  if (a.n() != b.n() || a.d() != b.d()) throw std::invalid_argument("pair_limits needs matching n and d");
  if (axis >= static_cast<std::size_t>(a.d())) throw std::invalid_argument("axis out of range");
  const auto limits = periodic_limit_points(difference(a.rows()[axis], b.rows()[axis]));
  Rational lo = limits.front().abs();
  Rational hi = lo;
  for (const auto& v : limits) {
    lo = min(lo, v.abs());
    hi = max(hi, v.abs());
  }
  return {lo, hi};
}

PairDiagnostics pair_diagnostics(const GridSystem& sys, std::size_t k1, std::size_t k2, std::size_t axis) {
  PairDiagnostics p;
  p.k1 = k1;
  p.k2 = k2;
  p.axis = axis;
  const auto far = is_n_far(sys[k1].delta()[axis] - sys[k2].delta()[axis], sys.n());
  p.far = far.far;
  p.C = far.constant;
  std::tie(p.D1, p.D2) = pair_limits(sys[k1], sys[k2], axis);
  return p;
}

AdjacencyReport check_adjacent_algebraic(const GridSystem& sys) {
  require_full_system(sys);
  AdjacencyReport report;
  report.checker = "algebraic";
  report.verdict = true;
  const auto d = static_cast<std::size_t>(sys.d());
  for (std::size_t k1 = 0; k1 < sys.size(); ++k1) {
    for (std::size_t k2 = k1 + 1; k2 < sys.size(); ++k2) {
      for (std::size_t s = 0; s < d; ++s) {
        PairDiagnostics p = pair_diagnostics(sys, k1, k2, s);
        const bool limits_ok = p.D1.sign() > 0 && p.D2 < Rational(1);
        if (report.verdict && (!p.far || !limits_ok)) {
          report.verdict = false;
          Failure f;
          f.grids = {k1, k2};
          f.axis = s;
          if (!p.far) {
            f.condition = "1";
            f.detail = "difference of initial positions " +
                       (sys[k1].delta()[s] - sys[k2].delta()[s]).to_string() + " is n-adic";
          } else {
            f.condition = "2";
            f.detail = p.D1.sign() == 0 ? "liminf is 0" : "limsup is 1";
          }
          report.failure = f;
        }
        report.pairs.push_back(std::move(p));
      }
    }
  }
  return report;
}

bool check_pair_1d(const GridRepresentation& a, const GridRepresentation& b) {
  if (a.d() != 1 || b.d() != 1) throw std::invalid_argument("check_pair_1d needs one-dimensional grids");
  if (a.n() != b.n()) throw std::invalid_argument("check_pair_1d needs a common base");
  if (!is_n_far(a.delta()[0] - b.delta()[0], a.n()).far) return false;
  const auto [c1, c2] = pair_limits(a, b, 0);
  return c1.sign() > 0 && c2 < Rational(1);
}

GridRepresentation project(const GridRepresentation& rep, std::size_t axis) {
  return GridRepresentation(rep.n(), 1, {rep.delta().at(axis)}, {rep.rows().at(axis)});
}

bool check_via_projections(const GridSystem& sys) {
  require_full_system(sys);
  for (std::size_t s = 0; s < static_cast<std::size_t>(sys.d()); ++s) {
    for (std::size_t k1 = 0; k1 < sys.size(); ++k1) {
      for (std::size_t k2 = k1 + 1; k2 < sys.size(); ++k2) {
        if (!check_pair_1d(project(sys[k1], s), project(sys[k2], s))) return false;
      }
    }
  }
  return true;
}

bool uniformness_check(const GridRepresentation& a, const GridRepresentation& b, std::size_t axis,
                       const std::vector<long>& shift_a, const std::vector<long>& shift_b) {
  const auto [d1, d2] = pair_limits(a, b, axis);
  const auto [e1, e2] = pair_limits(alternate_representation(a, shift_a), alternate_representation(b, shift_b), axis);
  if (e1 == d1 && e2 == d2) return true;
  return e1 == Rational(1) - d2 && e2 == Rational(1) - d1;
}

}  // namespace nadic
