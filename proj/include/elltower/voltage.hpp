#pragma once

#include <optional>
#include <vector>

#include "elltower/abelian.hpp"
#include "elltower/multigraph.hpp"

namespace elltower {

/// Voltage data on a Cayley graph: an integer-valued function beta on the
/// ordered generating set S, antisymmetric under inversion; it induces the
/// edge voltage alpha(e) = beta(g_origin - g_target) and an ell-adic tower.
struct VoltageDatum {
  FiniteAbelianGroup group;
  std::vector<std::vector<long>> gens;  // ordered S (exponent vectors)
  std::vector<long> beta;               // aligned with gens
  long ell;

  long m_beta() const;
  /// S_j = { s : beta(s) = m_beta - j } as generator indices, j in [0, 2 m_beta].
  std::vector<std::vector<int>> s_partition() const;
  /// beta at a group element; the element must lie in S.
  long beta_of(const std::vector<long>& elem) const;
  /// alpha on a directed edge of the Cayley graph of (group, gens).
  long alpha(const Multigraph& x, int edge_id) const;
};

struct VoltageReport {
  bool antisymmetry_ok = false;
  bool condition4_ok = false;
  bool shortcut_applies = false;  // generator of ell-coprime order with unit voltage
  std::optional<std::pair<int, long>> witness;  // (generator index, reached class mod ell)
  bool ok() const { return antisymmetry_ok && condition4_ok; }
};

/// Checks the admissibility conditions on beta. The tuple condition is
/// decided exactly by reachability on G x Z/ell.
VoltageReport validate_voltage(const VoltageDatum& d);

/// Throws antisymmetry_violated / condition4_fails when the report fails.
void require_valid(const VoltageDatum& d);

/// Derived cover at level n: vertices V x Z/ell^n ordered (base, fiber)
/// lexicographically; edge (e, s) runs (o(e), s) -> (t(e), s + alpha(e)).
Multigraph derived_graph(const Multigraph& x, const VoltageDatum& d, long level);

/// Whether the induced homomorphism on the fundamental group surjects onto
/// Z_ell: some fundamental cycle carries a unit voltage.
bool tower_connected(const Multigraph& x, const VoltageDatum& d);

}  // namespace elltower
