#include "elltower/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace elltower {

long FiniteAbelianGroup::order() const {
  long n = 1;
  for (long f : factor_orders) n *= f;
  return n;
}

long FiniteAbelianGroup::exponent() const {
  long n = 1;
  for (long f : factor_orders) n = std::lcm(n, f);
  return n;
}

std::vector<long> FiniteAbelianGroup::element(long index) const {
  std::vector<long> e(factor_orders.size());
  for (std::size_t k = factor_orders.size(); k-- > 0;) {
    e[k] = index % factor_orders[k];
    index /= factor_orders[k];
  }
  return e;
}

long FiniteAbelianGroup::index_of(const std::vector<long>& e) const {
  if (e.size() != factor_orders.size()) fail(errc::incompatible_shapes, "exponent vector length");
  long idx = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    long r = ((e[k] % factor_orders[k]) + factor_orders[k]) % factor_orders[k];
    idx = idx * factor_orders[k] + r;
  }
  return idx;
}

std::vector<long> FiniteAbelianGroup::reduce(const std::vector<long>& e) const {
  if (e.size() != factor_orders.size()) fail(errc::incompatible_shapes, "exponent vector length");
  std::vector<long> r(e.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    r[k] = ((e[k] % factor_orders[k]) + factor_orders[k]) % factor_orders[k];
  return r;
}

std::vector<long> FiniteAbelianGroup::add(const std::vector<long>& a,
                                          const std::vector<long>& b) const {
  std::vector<long> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return reduce(r);
}

std::vector<long> FiniteAbelianGroup::neg(const std::vector<long>& a) const {
  std::vector<long> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
  return reduce(r);
}

bool FiniteAbelianGroup::is_identity(const std::vector<long>& a) const {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (((a[k] % factor_orders[k]) + factor_orders[k]) % factor_orders[k] != 0) return false;
  return true;
}

long FiniteAbelianGroup::element_order(const std::vector<long>& a) const {
  long o = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    long r = ((a[k] % factor_orders[k]) + factor_orders[k]) % factor_orders[k];
    long d = std::gcd(r, factor_orders[k]);
    o = std::lcm(o, factor_orders[k] / d);
  }
  return o;
}

std::vector<Character> characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (long i = 0; i < g.order(); ++i) out.push_back(Character{g.element(i)});
  return out;
}

long char_pairing(const FiniteAbelianGroup& g, const Character& psi,
                  const std::vector<long>& elem) {
  if (psi.exponents.size() != g.factor_orders.size() || elem.size() != g.factor_orders.size())
    fail(errc::incompatible_shapes, "character/element shape mismatch");
  long n_root = g.exponent();
  long acc = 0;
  for (std::size_t k = 0; k < elem.size(); ++k) {
    long stride = n_root / g.factor_orders[k];
    acc = (acc + psi.exponents[k] % n_root * (elem[k] % n_root) % n_root * stride) % n_root;
  }
  return ((acc % n_root) + n_root) % n_root;
}

Character char_power(const FiniteAbelianGroup& g, const Character& psi, long c) {
  std::vector<long> e(psi.exponents.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    long m = g.factor_orders[k];
    e[k] = ((psi.exponents[k] * (c % m)) % m + m) % m;
  }
  return Character{e};
}

std::vector<long> decomposition_group(long n_root, long ell) {
  if (!is_prime(ell)) fail(errc::not_prime, "ell must be prime");
  if (n_root < 1) fail(errc::internal, "root order must be positive");
  long m_prime = n_root;
  while (m_prime % ell == 0) m_prime /= ell;
  // cyclic subgroup of (Z/m')^x generated by ell
  std::vector<bool> in_span(std::max<long>(m_prime, 1), false);
  if (m_prime <= 1) {
    in_span.assign(1, true);
  } else {
    long cur = 1;
    do {
      in_span[cur] = true;
      cur = (cur * (ell % m_prime)) % m_prime;
    } while (!in_span[cur]);
  }
  std::vector<long> out;
  for (long c = 0; c < n_root; ++c) {
    if (std::gcd(c, n_root) != 1) continue;
    if (m_prime <= 1 || in_span[c % m_prime]) out.push_back(c);
  }
  return out;
}

GaloisOrbitPartition galois_orbits(const FiniteAbelianGroup& g, long ell) {
  GaloisOrbitPartition part;
  part.n_root = g.exponent();
  part.decomposition_subgroup = decomposition_group(part.n_root, ell);
  auto chars = characters(g);
  std::vector<bool> seen(chars.size(), false);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (long c : part.decomposition_subgroup) {
      Character p = char_power(g, chars[i], c);
      long idx = g.index_of(p.exponents);
      if (!seen[idx]) {
        seen[idx] = true;
        orbit.push_back(static_cast<int>(idx));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

}  // namespace elltower
