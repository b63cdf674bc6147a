// nadic: adjacency checks, cover queries, witnesses and figures for n-adic
// grid systems described by a JSON spec file.
//
// Exit codes: 0 adjacent / found / ok, 1 not adjacent / not found,
// 2 input error, 3 inconclusive, 4 checkers disagree.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nadic/algebraic.hpp"
#include "nadic/cover.hpp"
#include "nadic/figure.hpp"
#include "nadic/geometric.hpp"
#include "nadic/io.hpp"

using namespace nadic;

namespace {

enum Exit { kOk = 0, kNo = 1, kInput = 2, kInconclusive = 3, kDisagree = 4 };

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("bad grid index '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<long> parse_levels(const std::string& text) {
  std::vector<long> out;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const long lo = std::stol(text.substr(0, colon));
    const long hi = std::stol(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("empty level range '" + text + "'");
    for (long m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

struct Common {
  std::string spec_path;
  std::string grids;

  GridSystem load() const {
    const SystemSpec spec = load_spec(spec_path);
    GridSystem sys = spec.system();
    if (grids.empty()) return sys;
    const auto idx = parse_indices(grids);
    for (auto i : idx) {
      if (i >= sys.size()) throw std::invalid_argument("grid index " + std::to_string(i) + " out of range");
    }
    return sys.subsystem(idx);
  }
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_check(const Common& c, const std::string& mode, long horizon) {
  const GridSystem sys = c.load();
  require_full_system(sys);
  Json out;
  out["mode"] = mode;
  std::vector<bool> verdicts;
  if (mode == "algebraic" || mode == "all") {
    const auto r = check_adjacent_algebraic(sys);
    out["algebraic"] = to_json(r);
    verdicts.push_back(r.verdict);
  }
  if (mode == "projection" || mode == "all") {
    const bool v = check_via_projections(sys);
    out["projection"] = {{"checker", "projection"}, {"verdict", v}};
    verdicts.push_back(v);
  }
  if (mode == "geometric" || mode == "all") {
    const auto r = horizon < 0 ? check_adjacent_geometric(sys) : check_adjacent_geometric(sys, horizon);
    out["geometric"] = to_json(r);
    verdicts.push_back(r.verdict);
  }
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == verdicts.front(); });
  out["agree"] = agree;
  out["verdict"] = agree ? Json(static_cast<bool>(verdicts.front())) : Json();
  print(out);
  if (!agree) {
    std::cerr << "error: checkers disagree\n";
    return kDisagree;
  }
  return verdicts.front() ? kOk : kNo;
}

int run_cover(const Common& c, const std::string& cube, long budget) {
  const GridSystem sys = c.load();
  const QueryCube q = parse_cube(cube);
  const CoverResult r = cover_query(sys, q, budget);
  print(to_json(r, q, sys.n()));
  return r.found ? kOk : kNo;
}

int run_witness(const Common& c, long N, const std::string& kind, const std::string& pair, long axis, long budget) {
  const GridSystem sys = c.load();
  std::optional<FailureDescriptor> desc;
  if (kind.empty()) {
    desc = find_failure(sys);
    if (!desc) {
      print(Json{{"adjacent", true}, {"witness", nullptr}});
      return kNo;
    }
  } else {
    FailureDescriptor f;
    f.kind = parse_witness_kind(kind);
    if (!pair.empty()) {
      const auto idx = parse_indices(pair);
      if (idx.size() != 2) throw std::invalid_argument("--pair takes two grid indices");
      f.k1 = idx[0];
      f.k2 = idx[1];
    }
    if (axis < 0) throw std::invalid_argument("--axis must be nonnegative");
    f.axis = static_cast<std::size_t>(axis);
    desc = f;
  }
  const WitnessCube w = witness_nonadjacent(sys, *desc, N);
  const long b = budget < 0 ? witness_budget(sys, w) : budget;
  const CoverResult r = cover_query(sys, w.cube, b);
  const bool ok = verify_witness(sys, w, b);
  Json out = to_json(w);
  out["budget"] = b;
  out["cover"] = to_json(r, w.cube, sys.n());
  out["verified"] = ok;
  print(out);
  return ok ? kOk : kNo;
}

int run_estimate(const Common& c, const std::string& scales, std::size_t samples, std::uint64_t seed, long budget,
                 unsigned workers) {
  const GridSystem sys = c.load();
  EstimateOptions opts;
  opts.scales = parse_levels(scales);
  opts.samples_per_scale = samples;
  opts.seed = seed;
  opts.budget = budget;
  opts.workers = workers;
  Json out = to_json(estimate_cover_constant(sys, opts));
  out["seed"] = seed;
  out["workers"] = workers;
  print(out);
  return kOk;
}

struct FigureArgs {
  std::string kind;
  std::string out;
  long level = 1;
  long grid = 0;
  std::string corner;
  std::string box;
  long horizon = 8;
};

int run_figure(const Common& c, const FigureArgs& a) {
  const GridSystem sys = c.load();
  Figure fig;
  auto member = [&]() -> const GridRepresentation& {
    if (a.grid < 0 || static_cast<std::size_t>(a.grid) >= sys.size()) throw std::invalid_argument("--grid out of range");
    return sys[static_cast<std::size_t>(a.grid)];
  };
  if (a.kind == "lattice") {
    std::vector<Point> deltas;
    for (const auto& g : sys.grids()) deltas.push_back(g.delta());
    const QueryCube box =
        a.box.empty() ? QueryCube(Point(static_cast<std::size_t>(sys.d()), Rational(0)), Rational(1)) : parse_cube(a.box);
    fig = lattice_figure(sys.n(), deltas, a.level, box);
  } else if (a.kind == "corner") {
    if (a.corner.empty()) throw std::invalid_argument("--corner is required for corner figures");
    fig = corner_figure(sys.n(), parse_point(a.corner), a.level);
  } else if (a.kind == "modulated") {
    fig = modulated_figure(member(), a.level);
  } else if (a.kind == "sampling") {
    fig = sampling_figure(sys.grids(), a.level);
  } else if (a.kind == "trajectory") {
    fig = trajectory_figure(member(), a.horizon);
  } else {
    throw std::invalid_argument("unknown figure kind '" + a.kind + "'");
  }
  std::ofstream svg(a.out);
  if (!svg) throw std::invalid_argument("cannot write '" + a.out + "'");
  svg << render_svg(fig);
  const std::string side_path = a.out + ".json";
  std::ofstream side(side_path);
  if (!side) throw std::invalid_argument("cannot write '" + side_path + "'");
  side << sidecar(fig).dump(2) << '\n';
  print(Json{{"svg", a.out}, {"sidecar", side_path}, {"points", fig.points.size()}, {"segments", fig.segments.size()}});
  return kOk;
}

int run_trajectory(const Common& c, long grid, long horizon) {
  const GridSystem sys = c.load();
  if (grid < 0 || static_cast<std::size_t>(grid) >= sys.size()) throw std::invalid_argument("--grid out of range");
  if (horizon < 0) throw std::invalid_argument("--horizon must be nonnegative");
  std::cout << "j\tdelta + L(j)\n";
  for (long j = 0; j <= horizon; ++j) {
    std::cout << j << '\t' << to_string(trajectory_point(sys[static_cast<std::size_t>(grid)], j)) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-adic grid systems: adjacency, covers, witnesses, figures"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("spec", c.spec_path, "system spec JSON")->required();
    sub->add_option("--grids", c.grids, "comma separated member indices (0-based)");
  };

  Common check_c, cover_c, witness_c, estimate_c, figure_c, traj_c;

  std::string mode = "all";
  long check_horizon = -1;
  auto* check = app.add_subcommand("check", "decide adjacency");
  add_common(check, check_c);
  check->add_option("--mode", mode)->check(CLI::IsMember({"algebraic", "geometric", "projection", "all"}));
  check->add_option("--horizon", check_horizon, "geometric horizon J (default: smallest sufficient)");

  std::string cube;
  long cover_budget = 8;
  auto* cover = app.add_subcommand("cover", "find a grid cube containing a query cube");
  add_common(cover, cover_c);
  cover->add_option("--cube", cube, "\"a1/b1,a2/b2 len p/q\"")->required();
  cover->add_option("--budget", cover_budget, "coarser levels to scan")->check(CLI::NonNegativeNumber);

  long N = 16;
  std::string wkind, wpair;
  long waxis = 0;
  long wbudget = -1;
  auto* witness = app.add_subcommand("witness", "build a cube with large cover ratio");
  add_common(witness, witness_c);
  witness->add_option("--N", N, "guaranteed ratio")->check(CLI::PositiveNumber);
  witness->add_option("--kind", wkind, "far-failure, small-liminf, large-limsup or too-few-grids");
  witness->add_option("--pair", wpair, "k1,k2");
  witness->add_option("--axis", waxis);
  witness->add_option("--budget", wbudget, "levels for verification (default: enough for the guarantee)");

  std::string scales = "-8:8";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  long est_budget = 8;
  unsigned workers = 1;
  auto* estimate = app.add_subcommand("estimate", "empirical cover constant");
  add_common(estimate, estimate_c);
  estimate->add_option("--scales", scales, "lo:hi or comma separated levels");
  estimate->add_option("--samples", samples)->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed);
  estimate->add_option("--budget", est_budget)->check(CLI::NonNegativeNumber);
  estimate->add_option("--workers", workers)->check(CLI::PositiveNumber);

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "write an SVG and an exact sidecar JSON");
  add_common(figure, figure_c);
  figure->add_option("--kind", fa.kind)
      ->required()
      ->check(CLI::IsMember({"lattice", "corner", "modulated", "sampling", "trajectory"}));
  figure->add_option("--out", fa.out, "SVG path; the sidecar goes to <out>.json")->required();
  figure->add_option("--level", fa.level, "m for lattices and corners, j for modulated and sampling");
  figure->add_option("--grid", fa.grid);
  figure->add_option("--corner", fa.corner, "x1,x2");
  figure->add_option("--box", fa.box, "\"a1,a2 len l\"");
  figure->add_option("--horizon", fa.horizon);

  long tgrid = 0;
  long thorizon = 8;
  auto* traj = app.add_subcommand("trajectory", "print delta + L(j)");
  add_common(traj, traj_c);
  traj->add_option("--grid", tgrid);
  traj->add_option("--horizon", thorizon, "J");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return run_check(check_c, mode, check_horizon);
    if (*cover) return run_cover(cover_c, cube, cover_budget);
    if (*witness) return run_witness(witness_c, N, wkind, wpair, waxis, wbudget);
    if (*estimate) return run_estimate(estimate_c, scales, samples, seed, est_budget, workers);
    if (*figure) return run_figure(figure_c, fa);
    if (*traj) return run_trajectory(traj_c, tgrid, thorizon);
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
