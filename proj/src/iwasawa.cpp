#include "elltower/iwasawa.hpp"

#include <algorithm>
#include <numeric>

#include "elltower/complexity.hpp"

namespace elltower {

Matrix<LaurentPoly<Int>> voltage_matrix(const Multigraph& x, const VoltageDatum& d) {
  int n = x.vertex_count();
  Matrix<LaurentPoly<Int>> m(n, n);
  for (int v = 0; v < n; ++v) m(v, v) = LaurentPoly<Int>::constant(Int(x.degree(v)));
  for (int e = 0; e < x.edge_count(); ++e)
    m(x.edge(e).origin, x.edge(e).target) =
        m(x.edge(e).origin, x.edge(e).target) - LaurentPoly<Int>::monomial(d.alpha(x, e), 1);
  return m;
}

namespace {

// mu = min content valuation of g, lambda = first index attaining it
std::pair<long, long> mu_lambda_of(const IntPoly& g, long ell) {
  long mu = -1, lambda = -1;
  for (std::size_t i = 0; i < g.c.size(); ++i) {
    if (is_zero(g.c[i])) continue;
    long v = valuation_int(g.c[i], ell);
    if (mu < 0 || v < mu) {
      mu = v;
      lambda = static_cast<long>(i);
    }
  }
  if (mu < 0) fail(errc::internal, "zero series has no invariants");
  return {mu, lambda};
}

}  // namespace

IwasawaResult iwasawa_series(const Multigraph& x, const VoltageDatum& d) {
  BaseReport base = validate_base(x);
  if (!base.assumption_ok)
    fail(errc::assumption_violated, "graph is disconnected, has a degree-1 vertex, or is a cycle");
  if (!tower_connected(x, d)) fail(errc::tower_disconnected, "no fundamental cycle carries a unit voltage");

  IwasawaResult r;
  LaurentPoly<Int> det = det_laurent(voltage_matrix(x, d));
  if (det.zero()) fail(errc::internal, "voltage determinant vanished identically");
  r.det_x = det.p;
  auto [f_t, shift] = shift_to_T(det);
  r.F = std::move(f_t);
  r.shift = shift;
  if (r.F.c.empty() || !is_zero(r.F.c[0]))
    fail(errc::internal, "determinant is not divisible by T");
  IntPoly g(std::vector<Int>(r.F.c.begin() + 1, r.F.c.end()));
  auto [mu, lambda] = mu_lambda_of(g, d.ell);
  r.mu = mu;
  r.lambda = lambda;
  Int content = pow_int(Int(d.ell), static_cast<unsigned long>(mu));
  IntPoly prim = g;
  for (auto& c : prim.c)
    if (!is_zero(c)) c = divexact(c, content);
  r.g_primitive = std::move(prim);
  return r;
}

CharFactor char_factor(const VoltageDatum& d, const Character& psi) {
  CharFactor cf;
  cf.psi = psi;
  long n_root = d.group.exponent();
  long m = d.m_beta();
  long r = static_cast<long>(d.gens.size());
  cf.a.assign(2 * m + 1, CycInt());
  cf.a[m] = cf.a[m] + CycInt(r);
  for (std::size_t i = 0; i < d.gens.size(); ++i) {
    long j = m - d.beta[i];
    cf.a[j] = cf.a[j] - CycInt::zeta_power(n_root, char_pairing(d.group, psi, d.gens[i]));
  }
  Poly<CycInt> x_form(cf.a);
  cf.p_t = substitute_one_plus_t(x_form, CycInt(1));
  return cf;
}

std::optional<std::pair<long, long>> char_invariants(const CharFactor& cf, const LocalField& l) {
  long mu = -1, lambda = -1;
  for (std::size_t i = 0; i < cf.p_t.c.size(); ++i) {
    if (is_zero(cf.p_t.c[i])) continue;
    Valuation v = l.valuation(l.embed(cf.p_t.c[i]));
    if (!v.exact) return std::nullopt;
    if (mu < 0 || v.value < mu) {
      mu = v.value;
      lambda = static_cast<long>(i);
    }
  }
  if (mu < 0) fail(errc::internal, "character factor vanished identically");
  return std::make_pair(mu, lambda);
}

std::pair<long, long> compute_char_invariants(std::vector<CharFactor>& cfs,
                                              const FiniteAbelianGroup& g, long ell,
                                              long start_precision) {
  long n_root = g.exponent();
  for (long prec = start_precision; prec <= 512; prec *= 2) {
    LocalField l(ell, n_root, prec);
    bool resolved = true;
    std::vector<std::pair<long, long>> vals(cfs.size());
    for (std::size_t i = 0; i < cfs.size() && resolved; ++i) {
      auto v = char_invariants(cfs[i], l);
      if (!v)
        resolved = false;
      else
        vals[i] = *v;
    }
    if (resolved) {
      for (std::size_t i = 0; i < cfs.size(); ++i) {
        cfs[i].mu_psi = vals[i].first;
        cfs[i].lambda_psi = vals[i].second;
      }
      return {l.ramification_index(), l.residue_degree()};
    }
  }
  fail(errc::precision_exhausted, "character valuations exceed the precision cap");
}

bool factorization_check(const Multigraph& x, const VoltageDatum& d) {
  LaurentPoly<Int> det = det_laurent(voltage_matrix(x, d));
  long m = d.m_beta();
  long n = d.group.order();
  long offset = m * n + det.low;
  if (offset < 0) return false;  // determinant has deeper poles than the product allows
  Poly<Int> lhs = det.p.shifted(offset);

  Poly<CycInt> prod(std::vector<CycInt>{CycInt(1)});
  auto chars = characters(d.group);
  for (const auto& psi : chars) {
    CharFactor cf = char_factor(d, psi);
    prod = prod * Poly<CycInt>(cf.a);
  }
  std::vector<Int> rational;
  rational.reserve(prod.c.size());
  for (const auto& c : prod.c) {
    if (!c.is_rational()) return false;
    rational.push_back(c.to_integer());
  }
  return lhs == Poly<Int>(std::move(rational));
}

bool aggregate_check(const IwasawaResult& r, const std::vector<CharFactor>& cfs, long e) {
  long mu_sum = 0, lambda_sum = 0;
  for (const auto& cf : cfs) {
    if (cf.mu_psi < 0) fail(errc::internal, "character invariants not computed");
    mu_sum += cf.mu_psi;
    lambda_sum += cf.lambda_psi;
  }
  return e * r.mu == mu_sum && r.lambda == lambda_sum - 1;
}

namespace {

// mu/lambda of an integer polynomial (content valuation, first index at it)
std::pair<long, long> rational_invariants(const Poly<Int>& p, long ell) {
  long mu = -1, lambda = -1;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (is_zero(p.c[i])) continue;
    long v = valuation_int(p.c[i], ell);
    if (mu < 0 || v < mu) {
      mu = v;
      lambda = static_cast<long>(i);
    }
  }
  return {mu, lambda};
}

std::optional<Poly<Int>> rational_poly(const Poly<CycInt>& p) {
  std::vector<Int> out;
  out.reserve(p.c.size());
  for (const auto& c : p.c) {
    if (!c.is_rational()) return std::nullopt;
    out.push_back(c.to_integer());
  }
  return Poly<Int>(std::move(out));
}

}  // namespace

OrbitCheckReport orbit_cross_check(const VoltageDatum& d, const GaloisOrbitPartition& orbits,
                                   const std::vector<CharFactor>& cfs,
                                   const IwasawaResult& /*r*/, long e) {
  OrbitCheckReport rep;
  for (const auto& orbit : orbits.orbits) {
    OrbitCheckEntry entry;
    entry.character_indices = orbit;
    Poly<CycInt> prod(std::vector<CycInt>{CycInt(1)});
    long mu_sum = 0, lambda_sum = 0;
    for (int idx : orbit) {
      prod = prod * cfs[idx].p_t;
      mu_sum += cfs[idx].mu_psi;
      lambda_sum += cfs[idx].lambda_psi;
    }
    auto rat = rational_poly(prod);
    entry.rational = rat.has_value();
    if (rat) {
      auto [mu_z, lambda_z] = rational_invariants(*rat, d.ell);
      entry.ok = (e * mu_z == mu_sum) && (lambda_z == lambda_sum);
    }
    rep.all_ok = rep.all_ok && entry.ok;
    rep.orbits.push_back(std::move(entry));
  }

  // per-character product over the full unit group: always rational
  long n_root = orbits.n_root;
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    Poly<CycInt> prod(std::vector<CycInt>{CycInt(1)});
    long mu_sum = 0, lambda_sum = 0;
    for (long c = 0; c < n_root; ++c) {
      if (std::gcd(c, n_root) != 1 && n_root > 1) continue;
      Character pc = char_power(d.group, cfs[i].psi, c);
      long idx = d.group.index_of(pc.exponents);
      prod = prod * cfs[idx].p_t;
      mu_sum += cfs[idx].mu_psi;
      lambda_sum += cfs[idx].lambda_psi;
    }
    auto rat = rational_poly(prod);
    if (!rat) {
      rep.full_products_ok = false;
      break;
    }
    auto [mu_z, lambda_z] = rational_invariants(*rat, d.ell);
    if (e * mu_z != mu_sum || lambda_z != lambda_sum) {
      rep.full_products_ok = false;
      break;
    }
  }
  rep.all_ok = rep.all_ok && rep.full_products_ok;
  return rep;
}

QuickCriteria quick_criteria(const VoltageDatum& d) {
  QuickCriteria qc;
  long ell = d.ell;
  LocalField l(ell, d.group.exponent(), 8);
  auto chars = characters(d.group);
  qc.nontrivial_unit.assign(chars.size(), -1);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    CharFactor cf = char_factor(d, chars[i]);
    CycInt p0 = cf.p_t.c.empty() ? CycInt() : cf.p_t.c[0];
    if (is_zero(p0)) {
      qc.nontrivial_unit[i] = 0;
    } else {
      Valuation v = l.valuation(l.embed(p0));
      qc.nontrivial_unit[i] = (v.exact && v.value == 0) ? 1 : 0;
    }
  }
  // (mu_1, lambda_1) = (0, 2) iff the T^2 coefficient of P_1 is a unit; that
  // coefficient is -sum beta(s)^2 / 2 exactly (the sum is even by
  // antisymmetry). For odd ell this is the classical sum-of-squares test;
  // at ell = 2 the halving matters.
  Int sq = 0;
  for (long b : d.beta) sq += Int(b) * Int(b);
  Int half = divexact(sq, Int(2));
  qc.trivial_mu0_lambda2 = !is_zero(half) && valuation_int(half, ell) == 0;

  auto part = d.s_partition();
  long m = d.m_beta();
  for (long j = 0; j < static_cast<long>(part.size()); ++j) {
    if (part[j].size() != 1) continue;
    if (j != m) qc.mu_zero_predicted = true;
    if (j != 0) qc.literal_singleton_exists = true;
  }
  qc.readings_disagree = qc.mu_zero_predicted != qc.literal_singleton_exists;
  return qc;
}

bool quick_criteria_agree(const QuickCriteria& qc, const std::vector<CharFactor>& cfs,
                          const IwasawaResult& r) {
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    bool trivial = std::all_of(cfs[i].psi.exponents.begin(), cfs[i].psi.exponents.end(),
                               [](long v) { return v == 0; });
    if (trivial) {
      bool is02 = cfs[i].mu_psi == 0 && cfs[i].lambda_psi == 2;
      if (qc.trivial_mu0_lambda2 != is02) return false;
      if (cfs[i].lambda_psi < 2) return false;
    } else {
      bool is00 = cfs[i].mu_psi == 0 && cfs[i].lambda_psi == 0;
      if ((qc.nontrivial_unit[i] == 1) != is00) return false;
    }
  }
  if (qc.mu_zero_predicted && r.mu != 0) return false;
  return true;
}

CompleteGraphResult complete_graph_invariants(long n, const std::vector<long>& beta, long ell) {
  if (n < 4)
    fail(errc::assumption_violated, "complete graphs need n >= 4 (K_3 is the triangle cycle)");
  FiniteAbelianGroup g{{n}};
  std::vector<std::vector<long>> gens;
  for (long s = 1; s < n; ++s) gens.push_back({s});
  VoltageDatum d{g, gens, beta, ell};
  require_valid(d);
  Multigraph x = build_cayley(g, gens);

  CompleteGraphResult out;
  out.series = iwasawa_series(x, d);
  Int sq = 0;
  for (long b : beta) sq += Int(b) * Int(b);
  Int half = divexact(sq, Int(2));
  out.hypothesis_met =
      (n % ell != 0) && !is_zero(half) && valuation_int(half, ell) == 0;
  out.prediction_holds = out.series.mu == 0 && out.series.lambda == 1;
  return out;
}

TowerReport tower_report(const Multigraph& x, const VoltageDatum& d, long depth, long mu,
                         long lambda) {
  if (depth < 2) fail(errc::depth_too_small, "tower depth must be at least 2");
  if (!tower_connected(x, d)) fail(errc::tower_disconnected, "tower is disconnected");
  TowerReport rep;
  long ell_pow = 1;
  for (long lev = 0; lev <= depth; ++lev) {
    Multigraph cover = derived_graph(x, d, lev);
    long e_n = complexity_ell_exponent(cover, d.ell);
    if (cover.vertex_count() <= 64) {
      auto [exact_e, unit] = ell_part(complexity_det(cover), d.ell);
      if (exact_e != e_n) fail(errc::internal, "modular and exact ell-exponents disagree");
    }
    rep.rows.push_back({lev, cover.vertex_count(), e_n, e_n - mu * ell_pow - lambda * lev});
    ell_pow *= d.ell;
  }
  for (long start = 0; start + 1 <= depth; ++start) {
    bool stable = true;
    for (long k = start; k < depth; ++k)
      if (rep.rows[k].nu_n != rep.rows[k + 1].nu_n) stable = false;
    if (stable) {
      rep.nu = rep.rows[start].nu_n;
      rep.n0 = start;
      break;
    }
  }
  return rep;
}

}  // namespace elltower
