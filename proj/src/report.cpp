#include "elltower/report.hpp"

#include <algorithm>
#include <sstream>

#include "elltower/complexity.hpp"
#include "elltower/ihara.hpp"

namespace elltower {

namespace {

long require_long(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(errc::parse_error, std::string("missing or non-integer field: ") + key);
  return j[key].get<long>();
}

std::vector<long> require_long_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(errc::parse_error, std::string("missing or non-array field: ") + key);
  std::vector<long> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) fail(errc::parse_error, std::string("non-integer entry in ") + key);
    out.push_back(v.get<long>());
  }
  return out;
}

Json int_string(const Int& v) { return Json(v.get_str()); }

Json poly_strings(const Poly<Int>& p) {
  Json arr = Json::array();
  for (const auto& c : p.c) arr.push_back(int_string(c));
  return arr;
}

Json cyc_strings(const CycInt& c) {
  Json arr = Json::array();
  for (const auto& v : c.padded_coeffs()) arr.push_back(int_string(v));
  return arr;
}

bool check_enabled(const JobConfig& cfg, const std::string& name) {
  if (cfg.checks.empty()) return true;
  return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

Json base_json(const BaseReport& b, const Multigraph& x) {
  Json out;
  out["vertices"] = x.vertex_count();
  out["directed_edges"] = x.edge_count();
  out["connected"] = b.connected;
  out["min_degree"] = b.min_degree;
  out["euler_characteristic"] = b.euler_characteristic;
  out["betti"] = Json::array({b.b0, b.b1});
  out["assumption_ok"] = b.assumption_ok;
  return out;
}

Json voltage_json(const VoltageDatum& d, const VoltageReport& v, bool tower_conn) {
  Json out;
  out["antisymmetry_ok"] = v.antisymmetry_ok;
  out["condition4_ok"] = v.condition4_ok;
  out["shortcut_applies"] = v.shortcut_applies;
  if (v.witness)
    out["condition4_witness"] = Json::array({v.witness->first, v.witness->second});
  else
    out["condition4_witness"] = nullptr;
  out["m_beta"] = d.m_beta();
  out["tower_connected"] = tower_conn;
  return out;
}

struct PipelineData {
  Multigraph graph;
  BaseReport base;
  VoltageReport vreport;
  bool tower_conn;
};

PipelineData run_gates(const JobConfig& cfg, const VoltageDatum& d) {
  Multigraph x = build_cayley(d.group, d.gens);
  BaseReport base = validate_base(x);
  VoltageReport vr = validate_voltage(d);
  bool conn = base.connected && vr.ok() ? tower_connected(x, d) : false;
  return {std::move(x), base, vr, conn};
}

}  // namespace

JobConfig parse_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(errc::parse_error, "config must be a JSON object");
  JobConfig cfg;
  cfg.ell = require_long(j, "ell");
  cfg.group = require_long_list(j, "group");
  if (cfg.group.empty()) fail(errc::parse_error, "group must have at least one factor");
  for (long f : cfg.group)
    if (f < 2) fail(errc::parse_error, "group factors must be >= 2");
  if (!j.contains("gens") || !j["gens"].is_array()) fail(errc::parse_error, "missing gens");
  for (const auto& g : j["gens"]) {
    if (!g.is_array()) fail(errc::parse_error, "gens entries must be arrays");
    std::vector<long> vec;
    for (const auto& v : g) {
      if (!v.is_number_integer()) fail(errc::parse_error, "gens entries must be integer arrays");
      vec.push_back(v.get<long>());
    }
    if (vec.size() != cfg.group.size())
      fail(errc::parse_error, "generator exponent vector has the wrong length");
    cfg.gens.push_back(std::move(vec));
  }
  cfg.beta = require_long_list(j, "beta");
  if (cfg.beta.size() != cfg.gens.size())
    fail(errc::parse_error, "beta and gens must have the same length");
  if (j.contains("precision")) cfg.precision = require_long(j, "precision");
  if (j.contains("tower_depth")) cfg.tower_depth = require_long(j, "tower_depth");
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) fail(errc::parse_error, "checks must be an array of names");
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) fail(errc::parse_error, "checks must be an array of names");
      cfg.checks.push_back(c.get<std::string>());
    }
  }
  return cfg;
}

VoltageDatum datum_of(const JobConfig& cfg) {
  return VoltageDatum{FiniteAbelianGroup{cfg.group}, cfg.gens, cfg.beta, cfg.ell};
}

Json run_validate(const JobConfig& cfg) {
  VoltageDatum d = datum_of(cfg);
  PipelineData p = run_gates(cfg, d);
  Json out;
  out["base"] = base_json(p.base, p.graph);
  out["voltage"] = voltage_json(d, p.vreport, p.tower_conn);
  Json failures = Json::array();
  if (!p.base.connected) failures.push_back("base graph disconnected");
  if (p.base.min_degree < 2) failures.push_back("vertex of degree < 2");
  if (p.base.euler_characteristic == 0) failures.push_back("cycle graph (chi = 0)");
  if (!p.vreport.antisymmetry_ok) failures.push_back("beta antisymmetry fails (condition 2)");
  if (!p.vreport.condition4_ok) failures.push_back("condition (4) fails");
  if (p.base.assumption_ok && p.vreport.ok() && !p.tower_conn)
    failures.push_back("tower disconnected");
  out["failures"] = failures;
  out["ok"] = failures.empty();
  return out;
}

Json run_invariants(const JobConfig& cfg) {
  VoltageDatum d = datum_of(cfg);
  PipelineData p = run_gates(cfg, d);
  Json out;
  out["base"] = base_json(p.base, p.graph);
  out["voltage"] = voltage_json(d, p.vreport, p.tower_conn);
  if (!p.base.assumption_ok) fail(errc::assumption_violated, "base assumptions fail");
  if (!p.vreport.ok())
    fail(p.vreport.antisymmetry_ok ? errc::condition4_fails : errc::antisymmetry_violated,
         "voltage data inadmissible");
  if (!p.tower_conn) fail(errc::tower_disconnected, "tower is disconnected");

  IwasawaResult r = iwasawa_series(p.graph, d);
  auto chars = characters(d.group);
  std::vector<CharFactor> cfs;
  cfs.reserve(chars.size());
  for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
  auto [e, f] = compute_char_invariants(cfs, d.group, d.ell, cfg.precision);

  Json iw;
  iw["mu"] = r.mu;
  iw["lambda"] = r.lambda;
  iw["nu"] = nullptr;
  iw["n0"] = nullptr;
  iw["shift"] = r.shift;
  iw["F"] = poly_strings(r.F);
  iw["g_primitive"] = poly_strings(r.g_primitive);
  iw["ramification_index"] = e;
  iw["residue_degree"] = f;
  out["iwasawa"] = iw;

  Json chars_json = Json::array();
  for (const auto& cf : cfs) {
    Json c;
    c["exponents"] = cf.psi.exponents;
    Json a = Json::array();
    for (const auto& coeff : cf.a) a.push_back(cyc_strings(coeff));
    c["a"] = a;
    Json pt = Json::array();
    for (const auto& coeff : cf.p_t.c) pt.push_back(cyc_strings(coeff));
    c["P_T"] = pt;
    c["mu_psi"] = cf.mu_psi;
    c["lambda_psi"] = cf.lambda_psi;
    chars_json.push_back(std::move(c));
  }
  out["characters"] = chars_json;

  QuickCriteria qc = quick_criteria(d);
  Json qj;
  qj["trivial_predicts_mu0_lambda2"] = qc.trivial_mu0_lambda2;
  qj["mu_zero_predicted"] = qc.mu_zero_predicted;
  qj["singleton_readings_disagree"] = qc.readings_disagree;
  Json units = Json::array();
  for (std::size_t i = 1; i < qc.nontrivial_unit.size(); ++i)
    units.push_back(qc.nontrivial_unit[i] == 1);
  qj["nontrivial_unit_predictions"] = units;
  out["quick_criteria"] = qj;

  Json checks;
  if (check_enabled(cfg, "factorization"))
    checks["factorization"] = factorization_check(p.graph, d);
  if (check_enabled(cfg, "aggregate")) checks["aggregate"] = aggregate_check(r, cfs, e);
  if (check_enabled(cfg, "orbit")) {
    auto orbits = galois_orbits(d.group, d.ell);
    checks["orbit"] = orbit_cross_check(d, orbits, cfs, r, e).all_ok;
  }
  if (check_enabled(cfg, "quick_criteria"))
    checks["quick_criteria"] = quick_criteria_agree(qc, cfs, r);
  out["checks"] = checks;
  return out;
}

Json run_tower(const JobConfig& cfg) {
  VoltageDatum d = datum_of(cfg);
  PipelineData p = run_gates(cfg, d);
  if (!p.base.assumption_ok) fail(errc::assumption_violated, "base assumptions fail");
  if (!p.vreport.ok()) fail(errc::condition4_fails, "voltage data inadmissible");
  if (!p.tower_conn) fail(errc::tower_disconnected, "tower is disconnected");
  IwasawaResult r = iwasawa_series(p.graph, d);
  TowerReport tr = tower_report(p.graph, d, cfg.tower_depth, r.mu, r.lambda);
  Json out;
  out["mu"] = r.mu;
  out["lambda"] = r.lambda;
  Json rows = Json::array();
  for (const auto& row : tr.rows) {
    Json rj;
    rj["n"] = row.level;
    rj["vertices"] = row.vertices;
    rj["e_n"] = row.e_n;
    rj["nu_n"] = row.nu_n;
    rows.push_back(std::move(rj));
  }
  out["tower"] = Json{{"rows", rows},
                      {"nu", tr.nu ? Json(*tr.nu) : Json(nullptr)},
                      {"n0", tr.n0 ? Json(*tr.n0) : Json(nullptr)}};
  return out;
}

Json run_report(const JobConfig& cfg) {
  Json out = run_invariants(cfg);
  VoltageDatum d = datum_of(cfg);
  PipelineData p = run_gates(cfg, d);
  IwasawaResult r = iwasawa_series(p.graph, d);

  Json checks = out["checks"];
  if (check_enabled(cfg, "class_number")) checks["class_number"] = class_number_check(p.graph);
  if (check_enabled(cfg, "special_value"))
    checks["special_value"] = special_value_check(p.graph, d, 1);
  if (check_enabled(cfg, "artin")) checks["artin"] = artin_check(p.graph, d, 1);
  out["checks"] = checks;

  TowerReport tr = tower_report(p.graph, d, cfg.tower_depth, r.mu, r.lambda);
  Json rows = Json::array();
  for (const auto& row : tr.rows) {
    Json rj;
    rj["n"] = row.level;
    rj["vertices"] = row.vertices;
    rj["e_n"] = row.e_n;
    rj["nu_n"] = row.nu_n;
    rows.push_back(std::move(rj));
  }
  out["tower"] = Json{{"rows", rows},
                      {"nu", tr.nu ? Json(*tr.nu) : Json(nullptr)},
                      {"n0", tr.n0 ? Json(*tr.n0) : Json(nullptr)}};
  out["iwasawa"]["nu"] = tr.nu ? Json(*tr.nu) : Json(nullptr);
  out["iwasawa"]["n0"] = tr.n0 ? Json(*tr.n0) : Json(nullptr);
  return out;
}

std::string export_dot(const JobConfig& cfg, long level) {
  VoltageDatum d = datum_of(cfg);
  Multigraph x = build_cayley(d.group, d.gens);
  Multigraph cover = derived_graph(x, d, level);
  long fiber = 1;
  for (long i = 0; i < level; ++i) fiber *= d.ell;
  std::ostringstream os;
  os << "graph cover_level_" << level << " {\n";
  for (int v = 0; v < cover.vertex_count(); ++v)
    os << "  v" << v / fiber << "_s" << v % fiber << ";\n";
  for (int e : cover.orientation()) {
    auto ed = cover.edge(e);
    os << "  v" << ed.origin / fiber << "_s" << ed.origin % fiber << " -- v" << ed.target / fiber
       << "_s" << ed.target % fiber << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace elltower
