#include "doctest.h"
#include "generators.hpp"
#include "nadic/algebraic.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace nadic;
using systems::q;

namespace {

// liminf/limsup of |x_j| estimated from a long window that starts past the preperiods.
std::pair<Rational, Rational> window_limits(const GridRepresentation& a, const GridRepresentation& b, std::size_t s) {
  const auto c = difference(a.rows()[s], b.rows()[s]);
  const long start = static_cast<long>(c.preperiod().size()) + 40;
  const long p = static_cast<long>(c.period().size());
  Rational lo(2), hi(-1);
  for (long j = start; j < start + p; ++j) {
    const Rational x = oracle::normalized_sum(c, j).abs();
    lo = min(lo, x);
    hi = max(hi, x);
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("pair limits on the reference system") {
  const GridSystem sys = systems::adjacent_triple();
  for (std::size_t s = 0; s < 2; ++s) {
    CHECK(pair_limits(sys[0], sys[1], s) == std::pair{q(1, 3), q(1, 3)});
    CHECK(pair_limits(sys[0], sys[2], s) == std::pair{q(1, 3), q(2, 3)});
    CHECK(pair_limits(sys[1], sys[2], s) == std::pair{q(1, 3), q(2, 3)});
  }
  CHECK_THROWS_AS(pair_limits(sys[0], sys[1], 2), std::invalid_argument);
}

TEST_CASE("pair limits match long windows") {
  gen::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 4));
    const auto a = gen::grid(rng, n, 1);
    const auto b = gen::grid(rng, n, 1);
    const auto [d1, d2] = pair_limits(a, b, 0);
    const auto [w1, w2] = window_limits(a, b, 0);
    // The window sits 40 digits past the preperiod: within n^{-39} of the limit.
    const Rational tol = oracle::pow_n(n, -38);
    REQUIRE((d1 - w1).abs() <= tol);
    REQUIRE((d2 - w2).abs() <= tol);
  }
}

TEST_CASE("algebraic checker") {
  const auto ok = check_adjacent_algebraic(systems::adjacent_triple());
  CHECK(ok.verdict);
  CHECK(ok.checker == "algebraic");
  CHECK(ok.pairs.size() == 6);
  CHECK_FALSE(ok.failure.has_value());
  for (const auto& p : ok.pairs) {
    CHECK(p.far);
    REQUIRE(p.C.has_value());
  }
  CHECK(*ok.pairs[0].C == q(1, 3));
  CHECK(*ok.pairs[2].C == q(1, 15));

  const auto bad = check_adjacent_algebraic(systems::shared_axis());
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.failure.has_value());
  CHECK(bad.failure->condition == "1");
  CHECK(bad.failure->grids == std::vector<std::size_t>{0, 1});
  CHECK(*bad.failure->axis == 0);

  CHECK_THROWS_AS(check_adjacent_algebraic(systems::adjacent_triple().subsystem({0, 1})), std::invalid_argument);
}

TEST_CASE("condition on the limits") {
  // Far initial positions, but the rows agree: the differences vanish.
  const GridSystem same({systems::diagonal(2, q(1, 3), {}, {1, 0}), systems::diagonal(2, q(2, 3), {}, {1, 0}),
                         systems::diagonal(2, q(1, 5), {}, {0})});
  const auto r = check_adjacent_algebraic(same);
  CHECK_FALSE(r.verdict);
  CHECK(r.failure->condition == "2");
  CHECK(r.failure->grids == std::vector<std::size_t>{0, 1});
  CHECK(r.failure->detail == "liminf is 0");
  // Digits 0 against n-1 give limsup 1.
  const GridSystem wide({systems::diagonal(3, q(1, 4), {}, {2}), systems::diagonal(3, q(1, 2), {}, {0}),
                         systems::diagonal(3, q(1, 5), {}, {1})});
  const auto w = check_adjacent_algebraic(wide);
  CHECK_FALSE(w.verdict);
  CHECK(w.failure->detail == "limsup is 1");
}

TEST_CASE("one-dimensional pairs") {
  const GridRepresentation a(2, 1, {q(1, 3)}, {DigitSequence(2, {}, {1, 0})});
  const GridRepresentation b(2, 1, {q(2, 3)}, {DigitSequence(2, {}, {0, 1})});
  const GridRepresentation c(2, 1, {q(1, 2)}, {DigitSequence(2, {}, {0, 1})});
  CHECK(check_pair_1d(a, b));
  CHECK_FALSE(check_pair_1d(b, c));
  CHECK_FALSE(check_pair_1d(a, a));
  CHECK_THROWS_AS(check_pair_1d(systems::adjacent_triple()[0], a), std::invalid_argument);
  CHECK(project(systems::adjacent_triple()[0], 1) == a);
}

TEST_CASE("projection equivalence") {
  gen::Rng rng(32);
  int yes = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 3));
    const int d = static_cast<int>(gen::uniform(rng, 1, 3));
    const auto sys = gen::system(rng, n, d);
    const bool v = check_adjacent_algebraic(sys).verdict;
    yes += v;
    REQUIRE(v == check_via_projections(sys));
  }
  CHECK(yes > 10);
  CHECK(yes < 290);
}

TEST_CASE("uniformness under re-representation") {
  const GridSystem sys = systems::adjacent_triple();
  CHECK(uniformness_check(sys[0], sys[2], 0, {1, 0}, {0, 0}));
  const auto a2 = alternate_representation(sys[2], {1, 1});
  // 1/5 + 1 with all-ones rows: the limits flip to 1 - D2, 1 - D1.
  CHECK(pair_limits(sys[0], a2, 0) == std::pair{q(1, 3), q(2, 3)});
  gen::Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 5));
    const auto a = gen::grid(rng, n, 2);
    const auto b = gen::grid(rng, n, 2);
    REQUIRE(uniformness_check(a, b, static_cast<std::size_t>(t % 2), gen::shift(rng, 2, 20), gen::shift(rng, 2, 20)));
  }
}
