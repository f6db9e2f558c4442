#pragma once

#include <optional>
#include <vector>

#include "elltower/abelian.hpp"
#include "elltower/cyclotomic.hpp"
#include "elltower/laurent.hpp"
#include "elltower/localfield.hpp"
#include "elltower/multigraph.hpp"
#include "elltower/voltage.hpp"

namespace elltower {

/// Iwasawa data of the tower: cleared determinant D(x) = x^shift det M(x),
/// its T-form F, and the invariants read off the exact integer coefficients
/// of g = F/T (mu = content valuation, lambda = first unit-coefficient index).
struct IwasawaResult {
  Poly<Int> det_x;  // D(x), ascending
  IntPoly F;        // D evaluated at x = 1+T
  long shift = 0;
  long mu = 0;
  long lambda = 0;
  IntPoly g_primitive;  // (F/T) / ell^mu
  std::optional<long> nu;
  std::optional<long> n0;
};

/// Per-character factor P_psi(T) = (1+T)^m r - sum_s (1+T)^{m-beta(s)} psi(s),
/// with exact cyclotomic coefficients in both the x-power and T-power bases.
struct CharFactor {
  Character psi;
  std::vector<CycInt> a;    // x-basis coefficients a_j, j in [0, 2 m_beta]
  Poly<CycInt> p_t;         // T-basis
  long mu_psi = -1;
  long lambda_psi = -1;     // filled by char_invariants
};

/// M(x) = D_X - (sum over edges (v_i, v_j) of x^{alpha(e)}).
Matrix<LaurentPoly<Int>> voltage_matrix(const Multigraph& x, const VoltageDatum& d);

/// Determinant pipeline; requires the degree/connectivity assumptions and a
/// connected tower.
IwasawaResult iwasawa_series(const Multigraph& x, const VoltageDatum& d);

CharFactor char_factor(const VoltageDatum& d, const Character& psi);

/// (mu_psi, lambda_psi) from the valuations of the T-coefficients embedded in
/// L; nullopt when the precision did not resolve some valuation.
std::optional<std::pair<long, long>> char_invariants(const CharFactor& cf, const LocalField& l);

/// Fills invariants for all factors, sharing one field per precision level
/// and doubling up to 512 digits. Returns the field parameters (e, f).
std::pair<long, long> compute_char_invariants(std::vector<CharFactor>& cfs,
                                              const FiniteAbelianGroup& g, long ell,
                                              long start_precision = 32);

/// Exact identity x^{m_beta |G|} det M(x) = prod_psi P_psi in Z[x].
bool factorization_check(const Multigraph& x, const VoltageDatum& d);

/// e*mu == sum mu_psi and lambda == sum lambda_psi - 1.
bool aggregate_check(const IwasawaResult& r, const std::vector<CharFactor>& cfs, long e);

struct OrbitCheckEntry {
  std::vector<int> character_indices;
  bool rational = false;  // orbit product has rational coefficients
  bool ok = true;         // rational invariants match the local ones (when rational)
};

struct OrbitCheckReport {
  std::vector<OrbitCheckEntry> orbits;        // decomposition-group orbits
  bool full_products_ok = true;               // per-psi product over all of (Z/N)^x
  bool all_ok = true;
};

/// Rational cross-checks of the local valuations through Galois-stable
/// products of the P_psi.
OrbitCheckReport orbit_cross_check(const VoltageDatum& d, const GaloisOrbitPartition& orbits,
                                   const std::vector<CharFactor>& cfs,
                                   const IwasawaResult& r, long e);

struct QuickCriteria {
  std::vector<int> nontrivial_unit;   // 1 if P_psi(0) is a unit (predicts (0,0)); -1 for trivial
  bool trivial_mu0_lambda2 = false;   // sum beta^2 is a unit mod ell (predicts (0,2))
  bool mu_zero_predicted = false;     // some singleton S_j with j != m_beta
  bool literal_singleton_exists = false;  // some singleton S_j with j != 0
  bool readings_disagree = false;
};

/// Residue-field predictions for the per-character invariants.
QuickCriteria quick_criteria(const VoltageDatum& d);

/// Do the predictions agree with the computed invariants (biconditionally for
/// the unit and trivial-character tests, one-way for the mu prediction)?
bool quick_criteria_agree(const QuickCriteria& qc, const std::vector<CharFactor>& cfs,
                          const IwasawaResult& r);

struct CompleteGraphResult {
  bool hypothesis_met = false;     // ell coprime to n and sum beta^2 a unit
  bool prediction_holds = false;   // computed (mu, lambda) == (0, 1)
  IwasawaResult series;
};

/// K_n = Cay(Z/n, Z/n \ {0}); n >= 4.
CompleteGraphResult complete_graph_invariants(long n, const std::vector<long>& beta, long ell);

struct TowerRow {
  long level;
  long vertices;
  long e_n;   // v_ell(kappa) of the level-n cover
  long nu_n;  // e_n - mu ell^n - lambda n
};

struct TowerReport {
  std::vector<TowerRow> rows;
  std::optional<long> nu;
  std::optional<long> n0;
};

/// Complexity growth along the tower; kappa's ell-part comes from the
/// reduced-Laplacian kernel, cross-checked exactly on small covers.
TowerReport tower_report(const Multigraph& x, const VoltageDatum& d, long depth, long mu,
                         long lambda);

}  // namespace elltower
