#pragma once

// JSON forms of grids, systems and results. Rationals are "p/q" strings.

#include <string>
#include <vector>

#include "json.hpp"
#include "nadic/cover.hpp"
#include "nadic/grid.hpp"
#include "nadic/report.hpp"

namespace nadic {

using Json = nlohmann::ordered_json;

struct SystemSpec {
  int n = 2;
  int d = 1;
  std::vector<GridRepresentation> grids;

  GridSystem system() const { return GridSystem(grids); }
};

// All parse functions throw std::invalid_argument with a message naming the
// offending field.
Rational rational_from_json(const Json& j);
GridRepresentation grid_from_json(const Json& j);
SystemSpec spec_from_json(const Json& j);
SystemSpec load_spec(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const DigitSequence& row);
Json to_json(const GridRepresentation& g);
Json to_json(const SystemSpec& spec);
Json to_json(const AdjacencyReport& report);
Json to_json(const QueryCube& q);
Json to_json(const GridCube& c);
Json to_json(const CoverResult& r, const QueryCube& q, int n);
Json to_json(const WitnessCube& w);
Json to_json(const CoverEstimate& e);

// "a1/b1,a2/b2,... len p/q".
QueryCube parse_cube(const std::string& text);

// Comma separated rationals.
Point parse_point(const std::string& text);

std::string decimal(const Rational& r);

}  // namespace nadic
