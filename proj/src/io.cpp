#include "nadic/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nadic {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) fail(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::vector<int> digit_list(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) fail(std::string("field '") + name + "' must be an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) fail(std::string("field '") + name + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rationals must be \"p/q\" strings or integers");
}

GridRepresentation grid_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  const Json& delta = field(j, "delta");
  if (!delta.is_array()) fail("field 'delta' must be an array");
  Point p;
  for (const auto& e : delta) p.push_back(rational_from_json(e));
  const Json& rows = field(j, "digit_rows");
  if (!rows.is_array()) fail("field 'digit_rows' must be an array");
  std::vector<DigitSequence> seqs;
  for (const auto& r : rows) seqs.emplace_back(n, digit_list(r, "preperiod"), digit_list(r, "period"));
  return GridRepresentation(n, d, std::move(p), std::move(seqs));
}

SystemSpec spec_from_json(const Json& j) {
  SystemSpec spec;
  spec.n = int_field(j, "n");
  spec.d = int_field(j, "d");
  const Json& grids = field(j, "grids");
  if (!grids.is_array()) fail("field 'grids' must be an array");
  if (grids.empty()) fail("grid list is empty");
  for (std::size_t i = 0; i < grids.size(); ++i) {
    Json g = grids[i];
    if (g.is_object()) {
      if (!g.contains("n")) g["n"] = spec.n;
      if (!g.contains("d")) g["d"] = spec.d;
    }
    try {
      spec.grids.push_back(grid_from_json(g));
    } catch (const std::invalid_argument& e) {
      fail("grid " + std::to_string(i) + ": " + e.what());
    }
    if (spec.grids.back().n() != spec.n || spec.grids.back().d() != spec.d) {
      fail("grid " + std::to_string(i) + " disagrees with the system's n or d");
    }
  }
  return spec;
}

SystemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
  return spec_from_json(j);
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(x.to_string());
  return a;
}

Json to_json(const DigitSequence& row) { return {{"preperiod", row.preperiod()}, {"period", row.period()}}; }

Json to_json(const GridRepresentation& g) {
  Json rows = Json::array();
  for (const auto& r : g.rows()) rows.push_back(to_json(r));
  return {{"n", g.n()}, {"d", g.d()}, {"delta", to_json(g.delta())}, {"digit_rows", rows}};
}

Json to_json(const SystemSpec& spec) {
  Json grids = Json::array();
  for (const auto& g : spec.grids) grids.push_back(to_json(g));
  return {{"n", spec.n}, {"d", spec.d}, {"grids", grids}};
}

Json to_json(const AdjacencyReport& report) {
  Json j;
  j["checker"] = report.checker;
  j["verdict"] = report.verdict;
  if (!report.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back({{"pair", {p.k1, p.k2}},
                       {"axis", p.axis},
                       {"far", p.far},
                       {"C", p.C ? to_json(*p.C) : Json()},
                       {"D1", to_json(p.D1)},
                       {"D2", to_json(p.D2)}});
    }
    j["pairs"] = pairs;
  }
  if (!report.per_grid.empty()) {
    Json grids = Json::array();
    for (const auto& g : report.per_grid) {
      Json dist = Json::array();
      Json devs = Json::array();
      for (const auto& v : g.dist_ratio) dist.push_back(to_json(v));
      for (const auto& v : g.dev_ratio) devs.push_back(to_json(v));
      grids.push_back({{"grid", g.index},
                       {"far", g.far},
                       {"C", g.C ? to_json(*g.C) : Json()},
                       {"liminf", to_json(g.liminf)},
                       {"limsup", to_json(g.limsup)},
                       {"dist_ratio", dist},
                       {"dev_ratio", devs}});
    }
    j["grids"] = grids;
  }
  if (report.failure) {
    const Failure& f = *report.failure;
    j["failure"] = {{"condition", f.condition},
                    {"grids", f.grids},
                    {"axis", f.axis ? Json(*f.axis) : Json()},
                    {"detail", f.detail}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

Json to_json(const QueryCube& q) { return {{"anchor", to_json(q.anchor)}, {"side", to_json(q.side)}}; }

Json to_json(const GridCube& c) {
  Json idx = Json::array();
  for (const auto& k : c.index) idx.push_back(k.get_str());
  return {{"level", c.level}, {"index", idx}, {"anchor", to_json(c.anchor)}, {"side", to_json(c.side)}};
}

Json to_json(const CoverResult& r, const QueryCube& q, int n) {
  Json j;
  j["query"] = to_json(q);
  j["found"] = r.found;
  j["start_level"] = r.start_level;
  j["levels_searched"] = r.levels_searched;
  if (r.found) {
    j["grid"] = r.grid_index;
    j["cube"] = to_json(*r.cube);
    j["ratio"] = to_json(r.ratio);
    j["ratio_decimal"] = decimal(r.ratio);
  } else {
    const Rational bound = not_found_lower_bound(n, r, q.side);
    j["ratio_lower_bound"] = to_json(bound);
    j["ratio_lower_bound_decimal"] = decimal(bound);
  }
  return j;
}

Json to_json(const WitnessCube& w) {
  Json pts = Json::array();
  for (const auto& p : w.points) pts.push_back(to_json(p));
  return {{"construction", to_string(w.kind)},
          {"cube", to_json(w.cube)},
          {"guaranteed_ratio", to_json(w.guaranteed_ratio)},
          {"scale_index", w.scale_index},
          {"points", pts}};
}

Json to_json(const CoverEstimate& e) {
  return {{"max_ratio", to_json(e.max_ratio)},
          {"max_ratio_decimal", decimal(e.max_ratio)},
          {"samples", e.samples},
          {"not_found", e.not_found}};
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(Rational::parse(item));
  if (p.empty()) fail("empty point '" + text + "'");
  return p;
}

QueryCube parse_cube(const std::string& text) {
  const auto pos = text.find(" len ");
  if (pos == std::string::npos) fail("cube must look like \"a1/b1,a2/b2 len p/q\", got '" + text + "'");
  const Point anchor = parse_point(trim(text.substr(0, pos)));
  const Rational side = Rational::parse(trim(text.substr(pos + 5)));
  if (side.sign() <= 0) fail("cube sidelength must be positive");
  return QueryCube(anchor, side);
}

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", r.to_double());
  return buf;
}

}  // namespace nadic
