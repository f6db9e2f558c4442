#pragma once

#include <vector>

#include "elltower/intutil.hpp"

namespace elltower {

/// Finite abelian group presented as a product of cyclic factors.
/// Elements are exponent vectors reduced modulo the factor orders and are
/// enumerated lexicographically (index 0 is the identity).
struct FiniteAbelianGroup {
  std::vector<long> factor_orders;  // each >= 2

  long order() const;
  long exponent() const;  // lcm of the factor orders
  std::size_t rank() const { return factor_orders.size(); }

  std::vector<long> element(long index) const;
  long index_of(const std::vector<long>& e) const;
  std::vector<long> reduce(const std::vector<long>& e) const;
  std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const;
  std::vector<long> neg(const std::vector<long>& a) const;
  bool is_identity(const std::vector<long>& a) const;
  long element_order(const std::vector<long>& a) const;
};

struct Character {
  std::vector<long> exponents;  // one residue per cyclic factor
};

/// All characters in lexicographic exponent order; index 0 is trivial.
std::vector<Character> characters(const FiniteAbelianGroup& g);

/// Exponent k with psi(g) = zeta_N^k, N = exponent of the group.
long char_pairing(const FiniteAbelianGroup& g, const Character& psi, const std::vector<long>& elem);

/// psi^c as a character of the same group.
Character char_power(const FiniteAbelianGroup& g, const Character& psi, long c);

/// Subgroup of (Z/N)^x fixing the chosen prime above ell: writing N = ell^a*m',
/// the classes c with (c mod m') in <ell mod m'>.
std::vector<long> decomposition_group(long n_root, long ell);

struct GaloisOrbitPartition {
  long n_root;                             // N
  std::vector<long> decomposition_subgroup;
  std::vector<std::vector<int>> orbits;    // indices into characters(g), each sorted
};

/// Orbits of the character group under psi -> psi^c for c in the decomposition group.
GaloisOrbitPartition galois_orbits(const FiniteAbelianGroup& g, long ell);

}  // namespace elltower
