#include "doctest.h"
#include "generators.hpp"
#include "nadic/lattice.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace nadic;
using systems::q;

namespace {

std::vector<Point> random_deltas(gen::Rng& rng, std::size_t d, long max_den) {
  while (true) {
    std::vector<Point> ds(d);
    for (auto& p : ds) {
      for (std::size_t s = 0; s < d; ++s) p.push_back(gen::unit_rational(rng, max_den));
    }
    if (is_separated(ds)) return ds;
  }
}

// Distance along the axes from p to the generation-m boundary through delta.
Rational boundary_gap(const Point& p, const Point& delta, const Rational& h) {
  std::optional<Rational> best;
  for (std::size_t s = 0; s < p.size(); ++s) {
    const Rational r = (p[s] - delta[s]) / h;
    const Rational f = r - Rational(r.floor());
    const Rational g = min(f, Rational(1) - f) * h;
    if (!best || g < *best) best = g;
  }
  return *best;
}

}  // namespace

TEST_CASE("intervals and facets") {
  CHECK(Interval::point(q(1, 2)).contains(q(1, 2)));
  CHECK_FALSE(Interval::point(q(1, 2)).contains(q(1, 3)));
  const Interval iv{Rational(0), Rational(1)};
  CHECK(iv.contains(Rational(0)));
  CHECK_FALSE(iv.contains(Rational(1)));
}

TEST_CASE("corner sets") {
  const auto c = CornerSet::at_level(2, {q(1, 3), q(1, 3)}, 1).realize();
  REQUIRE(c.facets.size() == 2);
  CHECK(c.facets[0][0].is_point());
  CHECK(c.facets[0][1].hi == q(5, 6));
  CHECK(directional_dist(c, {q(1, 2), q(1, 2)}, 0) == Extended<Rational>(q(1, 6)));
  CHECK(directional_dist(c, {Rational(2), Rational(2)}, 0).is_infinite());
  CHECK(dev(c, {q(1, 2), q(2, 3)}) == Extended<Rational>(q(1, 3)));
  const auto e = dist_point_set(c, {Rational(0), Rational(0)});
  CHECK(e.squared == q(2, 9));
  CHECK_FALSE(e.exact().has_value());
  CHECK(e.approx() == doctest::Approx(0.4714).epsilon(1e-3));
  CHECK(*dist_point_set(c, {Rational(1), q(1, 3)}).exact() == q(1, 6));
  CHECK_THROWS_AS(dist_point_set(AxisAlignedSet{}, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("modulated corner sets") {
  const GridSystem sys = systems::adjacent_triple();
  const auto mc = modulated_corner_set(sys[0], 2);
  CHECK(mc.offsets == Point{q(4, 3), q(4, 3)});
  const auto set = mc.realize();
  CHECK(set.facets[1][0].hi == Rational(4));
  CHECK(modulated_corner_set(sys[1], 3).offsets == Point{q(8, 3), q(8, 3)});
  CHECK_THROWS_AS(modulated_corner_set(sys[0], -1), std::invalid_argument);
}

TEST_CASE("separation and degeneracy") {
  CHECK(is_separated({{q(1, 3), q(1, 3)}, {q(2, 3), q(2, 3)}}));
  CHECK_FALSE(is_separated({{q(1, 3), q(1, 3)}, {q(4, 3), q(2, 3)}}));
  CHECK(is_level_degenerate(2, {{Rational(0), q(1, 3)}, {q(1, 2), q(2, 3)}}, 1));
  CHECK_FALSE(is_level_degenerate(2, {{Rational(0), q(1, 3)}, {q(1, 2), q(2, 3)}}, 0));
}

TEST_CASE("small-scale lattice points") {
  const std::vector<Point> ds{{q(1, 3), q(1, 3)}, {q(2, 3), q(2, 3)}};
  const QueryCube unit({Rational(0), Rational(0)}, Rational(1));
  const auto pts = small_scale_lattice_points(2, ds, 1, unit);
  CHECK(pts.size() == 8);
  CHECK(pts == oracle::lattice_points(2, ds, 1, unit));
  CHECK(small_scale_lattice_points(2, ds, 0, unit) ==
        std::vector<Point>{{q(1, 3), q(2, 3)}, {q(2, 3), q(1, 3)}});
  CHECK_THROWS_AS(small_scale_lattice_points(2, {{q(1, 3), q(1, 3)}, {q(4, 3), q(2, 3)}}, 1, unit),
                  std::invalid_argument);
  CHECK_THROWS_AS(small_scale_lattice_points(2, {{Rational(0), q(1, 3)}, {q(1, 2), q(2, 3)}}, 1, unit),
                  std::invalid_argument);
}

TEST_CASE("small-scale lattice matches brute-force intersection") {
  gen::Rng rng(41);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 3));
    const auto d = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto ds = random_deltas(rng, d, 12);
    const long m = gen::uniform(rng, 0, 2);
    if (is_level_degenerate(n, ds, m)) continue;
    Point anchor;
    for (std::size_t s = 0; s < d; ++s) anchor.push_back(gen::rational(rng, 6, 2));
    const QueryCube box(anchor, Rational(1));
    REQUIRE(small_scale_lattice_points(n, ds, m, box) == oracle::lattice_points(n, ds, m, box));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("boundary to lattice distance") {
  const std::vector<Point> ds{{q(1, 3), q(1, 3)}, {q(2, 3), q(2, 3)}};
  CHECK(dist_boundary_to_lattice(2, {q(1, 5), q(1, 5)}, ds, 1) == q(1, 30));
  CHECK(dist_boundary_to_lattice(2, {q(1, 5), q(1, 5)}, ds, 0) == q(2, 15));
  gen::Rng rng(42);
  for (int t = 0; t < 150; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 3));
    const auto d = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto ds = random_deltas(rng, d, 12);
    Point delta;
    for (std::size_t s = 0; s < d; ++s) delta.push_back(gen::unit_rational(rng, 12));
    const long m = gen::uniform(rng, 0, 2);
    if (is_level_degenerate(n, ds, m)) continue;
    // The lattice is h-periodic with h <= 1, so the unit box sees every residue.
    const QueryCube box(Point(d, Rational(0)), Rational(1));
    std::optional<Rational> best;
    for (const auto& p : oracle::lattice_points(n, ds, m, box)) {
      const Rational g = boundary_gap(p, delta, oracle::pow_n(n, -m));
      if (!best || g < *best) best = g;
    }
    REQUIRE(best.has_value());
    REQUIRE(dist_boundary_to_lattice(n, delta, ds, m) == *best);
  }
}

TEST_CASE("n-far vectors") {
  const std::vector<Point> ds{{q(1, 3), q(1, 3)}, {q(2, 3), q(2, 3)}};
  const auto r = is_n_far_vector(2, {q(1, 5), q(1, 5)}, ds, 6);
  CHECK(r.far);
  CHECK(*r.constant == q(1, 15));
  REQUIRE(r.scaled.size() == 7);
  CHECK(r.scaled[1] == q(1, 15));
  for (const auto& v : r.scaled) CHECK(v >= *r.constant);
  const auto s = is_n_far_vector(2, {q(1, 2), q(1, 5)}, {{Rational(0), q(1, 3)}, {q(1, 3), q(2, 3)}}, 4);
  CHECK_FALSE(s.far);
  CHECK(s.scaled[1] == Rational(0));
}

TEST_CASE("n-far vector constants are lower bounds") {
  gen::Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 2, 4));
    const auto d = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto ds = random_deltas(rng, d, 20);
    Point delta;
    for (std::size_t s = 0; s < d; ++s) delta.push_back(gen::unit_rational(rng, 20));
    const auto r = is_n_far_vector(n, delta, ds, 10);
    if (!r.far) continue;
    for (const auto& v : r.scaled) REQUIRE(v >= *r.constant);
    REQUIRE(std::find(r.scaled.begin(), r.scaled.end(), Rational(0)) == r.scaled.end());
  }
}

TEST_CASE("large-scale sampling") {
  const GridSystem sys = systems::adjacent_triple();
  const auto s = large_scale_sampling({sys[0], sys[2]}, 1);
  CHECK(s.points == std::vector<Point>{{q(1, 5), q(4, 3)}, {q(4, 3), q(1, 5)}});
  CHECK_FALSE(s.degenerate);
  const auto t = large_scale_sampling({sys[0], sys[1]}, 1);
  CHECK(t.points == std::vector<Point>{{q(2, 3), q(4, 3)}, {q(4, 3), q(2, 3)}});
  CHECK_THROWS_AS(large_scale_sampling({sys[0]}, 1), std::invalid_argument);
  CHECK_THROWS_AS(large_scale_sampling({sys[0], sys[2]}, 0), std::invalid_argument);
}
