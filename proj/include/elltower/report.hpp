#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "elltower/iwasawa.hpp"

namespace elltower {

using Json = nlohmann::ordered_json;

/// Parsed job description; integers only, see README for the file format.
struct JobConfig {
  long ell = 0;
  std::vector<long> group;                 // cyclic factor orders
  std::vector<std::vector<long>> gens;     // exponent vectors
  std::vector<long> beta;                  // aligned with gens
  long precision = 32;
  long tower_depth = 3;
  std::vector<std::string> checks;         // empty = all applicable
};

JobConfig parse_config(const std::string& json_text);  // throws errc::parse_error

VoltageDatum datum_of(const JobConfig& cfg);

/// Gate checks: Cayley construction, base assumptions, voltage admissibility,
/// tower connectivity. "ok" tells the caller whether everything passed.
Json run_validate(const JobConfig& cfg);

/// Iwasawa invariants, the per-character table, and the identity checks.
Json run_invariants(const JobConfig& cfg);

/// Complexity growth along the tower.
Json run_tower(const JobConfig& cfg);

/// Everything: validate + invariants + tower.
Json run_report(const JobConfig& cfg);

/// Deterministic DOT rendering of the level-n derived cover.
std::string export_dot(const JobConfig& cfg, long level);

std::string format_json(const Json& j);

}  // namespace elltower
