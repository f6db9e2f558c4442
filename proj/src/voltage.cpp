#include "elltower/voltage.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace elltower {

long VoltageDatum::m_beta() const {
  long m = 0;
  for (long b : beta) m = std::max(m, b);
  return m;
}

std::vector<std::vector<int>> VoltageDatum::s_partition() const {
  long m = m_beta();
  std::vector<std::vector<int>> part(2 * m + 1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    long j = m - beta[i];
    if (j < 0 || j > 2 * m) fail(errc::internal, "beta value outside [-m, m]");
    part[j].push_back(static_cast<int>(i));
  }
  return part;
}

long VoltageDatum::beta_of(const std::vector<long>& elem) const {
  auto r = group.reduce(elem);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (group.reduce(gens[i]) == r) return beta[i];
  fail(errc::internal, "element is not a generator");
}

long VoltageDatum::alpha(const Multigraph& x, int edge_id) const {
  auto e = x.edge(edge_id);
  auto diff = group.add(group.element(e.origin), group.neg(group.element(e.target)));
  return beta_of(diff);
}

VoltageReport validate_voltage(const VoltageDatum& d) {
  if (d.gens.size() != d.beta.size()) fail(errc::incompatible_shapes, "beta/S length mismatch");
  if (!is_prime(d.ell)) fail(errc::not_prime, "ell must be prime");
  VoltageReport rep;

  rep.antisymmetry_ok = true;
  for (std::size_t i = 0; i < d.gens.size(); ++i) {
    auto inv = d.group.neg(d.gens[i]);
    bool found = false;
    for (std::size_t k = 0; k < d.gens.size(); ++k) {
      if (d.group.reduce(d.gens[k]) == inv) {
        found = true;
        if (d.beta[k] != -d.beta[i]) rep.antisymmetry_ok = false;
      }
    }
    if (!found) rep.antisymmetry_ok = false;
  }

  for (std::size_t i = 0; i < d.gens.size(); ++i) {
    long order = d.group.element_order(d.gens[i]);
    if (order > 1 && std::gcd(order, d.ell) == 1 && d.beta[i] % d.ell != 0)
      rep.shortcut_applies = true;
  }

  // reachability on (group element, voltage class mod ell) from (1, 0)
  long n = d.group.order();
  long ell = d.ell;
  std::vector<long> gen_idx(d.gens.size());
  std::vector<long> gen_beta(d.gens.size());
  std::vector<long> s_lookup(n, -1);
  for (std::size_t i = 0; i < d.gens.size(); ++i) {
    gen_idx[i] = d.group.index_of(d.gens[i]);
    gen_beta[i] = ((d.beta[i] % ell) + ell) % ell;
    s_lookup[gen_idx[i]] = static_cast<long>(i);
  }
  std::vector<bool> seen(n * ell, false);
  std::deque<long> q;
  auto push = [&](long g, long t) {
    if (!seen[g * ell + t]) {
      seen[g * ell + t] = true;
      q.push_back(g * ell + t);
    }
  };
  // states reachable in >= 1 steps
  for (std::size_t i = 0; i < d.gens.size(); ++i) push(gen_idx[i], gen_beta[i]);
  while (!q.empty() && !rep.witness) {
    long state = q.front();
    q.pop_front();
    long g = state / ell, t = state % ell;
    if (s_lookup[g] >= 0 && t != gen_beta[s_lookup[g]]) {
      rep.witness = {static_cast<int>(s_lookup[g]), t};
      break;
    }
    auto eg = d.group.element(g);
    for (std::size_t i = 0; i < d.gens.size(); ++i)
      push(d.group.index_of(d.group.add(eg, d.gens[i])), (t + gen_beta[i]) % ell);
  }
  rep.condition4_ok = rep.witness.has_value();
  return rep;
}

void require_valid(const VoltageDatum& d) {
  VoltageReport rep = validate_voltage(d);
  if (!rep.antisymmetry_ok)
    fail(errc::antisymmetry_violated, "beta(s^-1) != -beta(s) for some s");
  if (!rep.condition4_ok)
    fail(errc::condition4_fails, "no voltage-incongruent tuple exists; tower undetermined");
}

Multigraph derived_graph(const Multigraph& x, const VoltageDatum& d, long level) {
  if (level < 0) fail(errc::internal, "cover level must be nonnegative");
  long fiber = 1;
  for (long i = 0; i < level; ++i) {
    fiber *= d.ell;
    if (fiber * x.vertex_count() > 10'000'000)
      fail(errc::internal, "derived cover exceeds the supported size");
  }
  long ne = x.edge_count();
  std::vector<long> alpha(ne);
  for (long e = 0; e < ne; ++e) alpha[e] = ((d.alpha(x, static_cast<int>(e)) % fiber) + fiber) % fiber;
  std::vector<Multigraph::Edge> edges(ne * fiber);
  std::vector<int> inversion(ne * fiber);
  for (long e = 0; e < ne; ++e) {
    auto base = x.edge(static_cast<int>(e));
    long ie = x.inverse(static_cast<int>(e));
    for (long s = 0; s < fiber; ++s) {
      long id = e * fiber + s;
      long s_target = (s + alpha[e]) % fiber;
      edges[id] = {static_cast<int>(base.origin * fiber + s),
                   static_cast<int>(base.target * fiber + s_target)};
      inversion[id] = static_cast<int>(ie * fiber + s_target);
    }
  }
  return Multigraph(static_cast<int>(x.vertex_count() * fiber), std::move(edges),
                    std::move(inversion));
}

bool tower_connected(const Multigraph& x, const VoltageDatum& d) {
  auto s = spanning_structure(x);
  for (const auto& cycle : s.fundamental_cycles) {
    long total = 0;
    for (int e : cycle) total += d.alpha(x, e);
    if (((total % d.ell) + d.ell) % d.ell != 0) return true;
  }
  return false;
}

}  // namespace elltower
