#include "nadic/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "nadic/algebraic.hpp"

namespace nadic {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based stream: the k-th draw depends only on (key, k).
class Stream {
 public:
  Stream(std::uint64_t seed, long level, std::uint64_t index)
      : key_(mix(mix(mix(seed) ^ static_cast<std::uint64_t>(level)) ^ index)) {}

  std::uint64_t next() { return mix(key_ + 0x632BE59BD9B4E019ULL * ++counter_); }

  // Uniform-ish integer in [lo, hi).
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo)); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

template <class Offset>
CoverResult scan(const GridSystem& sys, const QueryCube& q, long max_coarsening, Offset offset) {
  if (max_coarsening < 0) throw std::invalid_argument("max_coarsening must be nonnegative");
  if (q.anchor.size() != static_cast<std::size_t>(sys.d())) throw std::invalid_argument("query dimension mismatch");
  CoverResult r;
  r.start_level = finest_admissible_level(sys.n(), q.side);
  for (long m = r.start_level; m >= r.start_level - max_coarsening; --m) {
    ++r.levels_searched;
    const Rational h = scale(sys.n(), m);
    for (std::size_t g = 0; g < sys.size(); ++g) {
      const Point& off = offset(g, m);
      GridCube cube;
      cube.level = m;
      cube.side = h;
      bool inside = true;
      for (std::size_t s = 0; s < off.size() && inside; ++s) {
        const Integer k = ((q.anchor[s] - off[s]) / h).floor();
        const Rational a = off[s] + Rational(k) * h;
        inside = q.anchor[s] + q.side <= a + h;
        cube.index.push_back(k);
        cube.anchor.push_back(a);
      }
      if (!inside) continue;
      r.found = true;
      r.grid_index = g;
      r.ratio = h / q.side;
      r.cube = std::move(cube);
      return r;
    }
  }
  return r;
}

std::size_t check_index(const GridSystem& sys, std::size_t k) {
  if (k >= sys.size()) throw std::invalid_argument("grid index " + std::to_string(k) + " out of range");
  return k;
}

// Centred cube of the given side around the midpoint of the points.
QueryCube centred_cube(const std::vector<Point>& points, const Rational& side) {
  Point anchor;
  for (std::size_t s = 0; s < points.front().size(); ++s) {
    Rational lo = points.front()[s];
    Rational hi = lo;
    for (const auto& p : points) {
      lo = min(lo, p[s]);
      hi = max(hi, p[s]);
    }
    anchor.push_back((lo + hi) / Rational(2) - side / Rational(2));
  }
  return QueryCube(std::move(anchor), side);
}

// Axes other than `skip`, one per remaining grid, in order.
void assign_other_axes(const GridSystem& sys, std::size_t k1, std::size_t k2, std::size_t skip,
                       const std::vector<Point>& coordinate_source, std::vector<Point>& points) {
  std::size_t axis = 0;
  for (std::size_t g = 0; g < sys.size(); ++g) {
    if (g == k1 || g == k2) continue;
    if (axis == skip) ++axis;
    for (auto& p : points) p[axis] = coordinate_source[g][axis];
    ++axis;
  }
}

}  // namespace

long finest_admissible_level(int n, const Rational& side) {
  if (side.sign() <= 0) throw std::invalid_argument("sidelength must be positive");
  long m = 0;
  while (scale(n, m) < side) --m;
  while (scale(n, m + 1) >= side) ++m;
  return m;
}

CoverResult cover_query(const GridSystem& sys, const QueryCube& q, long max_coarsening) {
  Point tmp;
  return scan(sys, q, max_coarsening, [&](std::size_t g, long m) -> const Point& {
    tmp = generation_offset(sys[g], m);
    return tmp;
  });
}

Rational not_found_lower_bound(int n, const CoverResult& r, const Rational& side) {
  return scale(n, r.start_level - r.levels_searched) / side;
}

CoverIndex::CoverIndex(const GridSystem& sys, long lowest_level, long highest_level)
    : sys_(sys), lo_(lowest_level), hi_(highest_level) {
  if (lo_ > hi_) throw std::invalid_argument("empty level range");
  for (const auto& g : sys_.grids()) {
    std::vector<Point> per_level;
    for (long m = lo_; m <= hi_; ++m) per_level.push_back(generation_offset(g, m));
    offsets_.push_back(std::move(per_level));
  }
}

const Point& CoverIndex::offset(std::size_t grid, long level) const {
  if (level < lo_ || level > hi_) throw std::out_of_range("level outside the indexed range");
  return offsets_[grid][static_cast<std::size_t>(level - lo_)];
}

CoverResult CoverIndex::query(const QueryCube& q, long max_coarsening) const {
  return scan(sys_, q, max_coarsening, [this](std::size_t g, long m) -> const Point& { return offset(g, m); });
}

QueryCube sample_cube(int n, int d, std::uint64_t seed, long level, std::uint64_t index) {
  Stream rng(seed, level, index);
  const Rational h = scale(n, level);
  const long b = rng.range(1, 101);
  const long a = rng.range(b, static_cast<long>(n) * b);
  Point anchor;
  for (int s = 0; s < d; ++s) {
    const long k = rng.range(-64, 64);
    const long den = rng.range(1, 10001);
    const long num = rng.range(0, den);
    anchor.push_back(h * (Rational(k) + Rational(Integer(num), Integer(den))));
  }
  return QueryCube(std::move(anchor), h * Rational(Integer(a), Integer(b)));
}

CoverEstimate estimate_cover_constant(const GridSystem& sys, const EstimateOptions& opts) {
  if (opts.samples_per_scale < 1) throw std::invalid_argument("samples_per_scale must be at least 1");
  if (opts.scales.empty()) throw std::invalid_argument("no scales given");
  const auto [lo_it, hi_it] = std::minmax_element(opts.scales.begin(), opts.scales.end());
  const CoverIndex index(sys, *lo_it - 1 - opts.budget, *hi_it);
  const std::size_t total = opts.scales.size() * opts.samples_per_scale;
  const unsigned workers = std::max(1U, opts.workers);

  std::vector<CoverEstimate> partial(workers);
  auto work = [&](unsigned w) {
    CoverEstimate& acc = partial[w];
    for (std::size_t f = w; f < total; f += workers) {
      const long level = opts.scales[f / opts.samples_per_scale];
      const QueryCube q = sample_cube(sys.n(), sys.d(), opts.seed, level, f % opts.samples_per_scale);
      const CoverResult r = index.query(q, opts.budget);
      Rational ratio = r.ratio;
      if (!r.found) {
        ++acc.not_found;
        ratio = not_found_lower_bound(sys.n(), r, q.side);
      }
      ++acc.samples;
      acc.max_ratio = acc.samples == 1 ? ratio : max(acc.max_ratio, ratio);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();

  CoverEstimate out;
  for (const auto& p : partial) {
    if (p.samples == 0) continue;
    out.max_ratio = out.samples == 0 ? p.max_ratio : max(out.max_ratio, p.max_ratio);
    out.samples += p.samples;
    out.not_found += p.not_found;
  }
  return out;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::FarFailure: return "far-failure";
    case WitnessKind::SmallLiminf: return "small-liminf";
    case WitnessKind::LargeLimsup: return "large-limsup";
    case WitnessKind::TooFewGrids: return "too-few-grids";
  }
  return "unknown";
}

WitnessKind parse_witness_kind(const std::string& text) {
  for (auto k : {WitnessKind::FarFailure, WitnessKind::SmallLiminf, WitnessKind::LargeLimsup, WitnessKind::TooFewGrids}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown witness kind '" + text + "'");
}

std::optional<FailureDescriptor> find_failure(const GridSystem& sys) {
  const auto d = static_cast<std::size_t>(sys.d());
  if (sys.size() <= d) return FailureDescriptor{WitnessKind::TooFewGrids, 0, 0, 0};
  const AdjacencyReport report = check_adjacent_algebraic(sys);
  if (report.verdict) return std::nullopt;
  const Failure& f = *report.failure;
  FailureDescriptor desc{WitnessKind::FarFailure, f.grids.at(0), f.grids.at(1), *f.axis};
  if (f.condition == "2") {
    const auto [d1, d2] = pair_limits(sys[desc.k1], sys[desc.k2], desc.axis);
    desc.kind = d1.is_zero() ? WitnessKind::SmallLiminf : WitnessKind::LargeLimsup;
  }
  return desc;
}

WitnessCube witness_nonadjacent(const GridSystem& sys, const FailureDescriptor& failure, long N) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const auto d = static_cast<std::size_t>(sys.d());
  const int n = sys.n();
  const Rational target(N);

  if (failure.kind == WitnessKind::TooFewGrids) {
    if (sys.size() > d) throw std::invalid_argument("too-few-grids needs at most d grids");
    long j = 0;
    while (Rational(ipow(n, static_cast<unsigned long>(j + 1))) < target) ++j;
    Point y(d, Rational(0));
    for (std::size_t g = 0; g < sys.size(); ++g) y[g] = trajectory_point(sys[g], j)[g];
    return {centred_cube({y}, Rational(1)), target, failure.kind, {y}, j};
  }

  if (sys.size() > d + 1) throw std::invalid_argument("witness construction needs at most d+1 grids");
  const std::size_t k1 = check_index(sys, failure.k1);
  const std::size_t k2 = check_index(sys, failure.k2);
  const std::size_t s = failure.axis;
  if (k1 == k2) throw std::invalid_argument("failure descriptor names a single grid");
  if (s >= d) throw std::invalid_argument("failure axis out of range");

  if (failure.kind == WitnessKind::FarFailure) {
    const Rational x = sys[k1].delta()[s] - sys[k2].delta()[s];
    if (is_n_far(x, n).far) throw std::invalid_argument("difference is n-far; no far failure");
    long m1 = 0;
    while (!(Rational(N) * dist_to_integer(x * Rational(ipow(n, static_cast<unsigned long>(m1)))) < Rational(1))) ++m1;
    const Rational h = scale(n, m1);
    const Integer K = (x / h).round();
    std::vector<Point> pts(2, Point(d, Rational(0)));
    pts[0][s] = sys[k1].delta()[s];
    pts[1][s] = sys[k2].delta()[s] + Rational(K) * h;
    std::vector<Point> source;
    for (const auto& g : sys.grids()) source.push_back(g.delta());
    assign_other_axes(sys, k1, k2, s, source, pts);
    const Rational side = Rational(2) * h / target;
    return {centred_cube(pts, side), target, failure.kind, pts, m1};
  }

  const DigitSequence& r1 = sys[k1].rows()[s];
  const DigitSequence& r2 = sys[k2].rows()[s];
  const SignedDigitSequence c = difference(r1, r2);
  const auto limits = residue_limits(c);
  const Rational want = failure.kind == WitnessKind::SmallLiminf ? Rational(0) : Rational(1);
  std::size_t q = 0;
  while (q < limits.size() && limits[q].abs() != want) ++q;
  if (q == limits.size()) {
    throw std::invalid_argument(failure.kind == WitnessKind::SmallLiminf ? "liminf is positive; no small-liminf failure"
                                                                         : "limsup is below 1; no large-limsup failure");
  }
  const Rational U = limits[q];
  const long pre = static_cast<long>(c.preperiod().size());
  const long p = static_cast<long>(c.period().size());
  for (long j = pre + 1 + static_cast<long>(q);; j += p) {
    const Rational nj(ipow(n, static_cast<unsigned long>(j)));
    const Point P1 = trajectory_point(sys[k1], j);
    const Point P2 = trajectory_point(sys[k2], j);
    const Rational spread = (P1[s] - P2[s] - U * nj).abs();
    const Rational side = spread + Rational(1);
    if (nj * Rational(n) < target * side) continue;
    std::vector<Point> pts(2, Point(d, Rational(0)));
    pts[0][s] = P1[s];
    pts[1][s] = P2[s] + U * nj;
    std::vector<Point> source;
    for (const auto& g : sys.grids()) source.push_back(trajectory_point(g, j));
    assign_other_axes(sys, k1, k2, s, source, pts);
    return {centred_cube(pts, side), target, failure.kind, pts, j};
  }
}

long witness_budget(const GridSystem& sys, const WitnessCube& w) {
  // Every generation at or finer than `blocked` is cut by a hyperplane
  // through the cube's interior.
  const long blocked = w.kind == WitnessKind::FarFailure ? w.scale_index : -w.scale_index;
  const long m0 = finest_admissible_level(sys.n(), w.cube.side);
  return std::max<long>(0, m0 - blocked + 1);
}

bool verify_witness(const GridSystem& sys, const WitnessCube& w, long budget) {
  const CoverResult r = cover_query(sys, w.cube, budget);
  if (r.found) return r.ratio >= w.guaranteed_ratio;
  return not_found_lower_bound(sys.n(), r, w.cube.side) >= w.guaranteed_ratio;
}

}  // namespace nadic
