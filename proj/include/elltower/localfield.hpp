#pragma once

#include <vector>

#include "elltower/cyclotomic.hpp"
#include "elltower/intutil.hpp"

namespace elltower {

class LocalField;

/// Element of O, the valuation ring of Q_ell(zeta_N), in the basis
/// u^i pi^j with i < f (unramified) and j < e (Eisenstein); coordinates are
/// residues modulo ell^precision. Immutable value type.
class LocalElem {
 public:
  const LocalField& field() const { return *field_; }
  const std::vector<Int>& coords() const { return c_; }  // index i*e + j

  LocalElem operator-() const;
  LocalElem operator+(const LocalElem& o) const;
  LocalElem operator-(const LocalElem& o) const;
  LocalElem operator*(const LocalElem& o) const;
  LocalElem pow(unsigned long k) const;
  bool operator==(const LocalElem& o) const;

 private:
  friend class LocalField;
  LocalElem(const LocalField* f, std::vector<Int> c) : field_(f), c_(std::move(c)) {}
  const LocalField* field_;
  std::vector<Int> c_;
};

/// Exact or lower-bounded pi-adic valuation. exact == false means the value
/// is only known to be at least `value` (escalate precision to resolve).
struct Valuation {
  bool exact;
  long value;
};

/// Finite-precision model of L = Q_ell(zeta_N) as the compositum of the
/// unramified subfield F_ell-degree f (Hensel-lifted factor of Phi_{m'}) and
/// the totally ramified Q_ell(zeta_{ell^a}) with Eisenstein generator
/// pi = zeta_{ell^a} - 1. The uniformizer is pi when a >= 1 and ell otherwise.
class LocalField {
 public:
  LocalField(long ell, long n_root, long precision);

  long ell() const { return ell_; }
  long n_root() const { return n_root_; }
  long ell_exponent() const { return a_; }    // a with N = ell^a m'
  long m_prime() const { return m_prime_; }
  long residue_degree() const { return f_; }  // f
  long ramification_index() const { return e_; }
  long precision() const { return precision_; }
  const Int& modulus() const { return modulus_; }  // ell^precision

  /// Monic degree-f factor of Phi_{m'} over Z/ell^precision (ascending).
  const std::vector<Int>& unramified_minpoly() const { return minpoly_; }
  /// E(x) = Phi_{ell^a}(1+x) over Z (ascending); degree e when a >= 1.
  const std::vector<Int>& eisenstein() const { return eisenstein_; }

  LocalElem zero() const;
  LocalElem one() const;
  LocalElem from_integer(const Int& v) const;
  /// Image of zeta_N. Elements must not outlive the field that made them.
  LocalElem zeta() const { return LocalElem(this, zeta_coords_); }
  LocalElem embed(const CycInt& z) const;

  Valuation valuation(const LocalElem& z) const;
  /// Image in the residue field F_{ell^f} = F_ell[u]/(minpoly mod ell);
  /// coordinates in [0, ell).
  std::vector<long> residue(const LocalElem& z) const;

  // residue-field helpers (tests and mod-ell criteria)
  std::vector<long> fq_from_int(long v) const;
  std::vector<long> fq_mul(const std::vector<long>& x, const std::vector<long>& y) const;
  bool fq_is_zero(const std::vector<long>& x) const;

  static constexpr long kGuardDigits = 4;

 private:
  long ell_, n_root_, a_, m_prime_, f_, e_, precision_;
  Int modulus_;
  std::vector<Int> minpoly_;     // length f+1, monic, mod ell^precision
  std::vector<Int> eisenstein_;  // length e+1 over Z (a >= 1); {0,1} placeholder for a = 0
  std::vector<long> minpoly_mod_ell_;
  std::vector<Int> zeta_coords_;

  std::vector<Int> mul_raw(const std::vector<Int>& x, const std::vector<Int>& y) const;
  friend class LocalElem;
};

}  // namespace elltower
