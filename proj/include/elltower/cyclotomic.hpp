#pragma once

#include <vector>

#include "elltower/intutil.hpp"

namespace elltower {

/// Exact element of Z[zeta_N]: integer vector of length phi(N) in the power
/// basis, reduced modulo the N-th cyclotomic polynomial. level() == 0 encodes
/// a plain rational integer that mixes with any N.
class CycInt {
 public:
  CycInt() = default;                 // rational zero
  CycInt(long v) : c_{Int(v)} { trim(); }
  CycInt(Int v) : c_{std::move(v)} { trim(); }

  static CycInt integer(Int v) { return CycInt(std::move(v)); }
  static CycInt zeta_power(long n_root, long k);
  static CycInt from_coeffs(long n_root, std::vector<Int> raw);  // any length; reduced

  long level() const { return n_; }
  const std::vector<Int>& coeffs() const { return c_; }
  /// Coefficient vector padded to phi(N) entries.
  std::vector<Int> padded_coeffs() const;

  bool is_rational() const;
  Int to_integer() const;  // requires is_rational

  /// Galois map zeta_N -> zeta_N^c; requires gcd(c, N) = 1.
  CycInt conjugate(long c) const;

  CycInt operator-() const;
  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  bool operator==(const CycInt& o) const;

  /// Ascending monic coefficients of the N-th cyclotomic polynomial (cached).
  static const std::vector<Int>& cyclotomic_polynomial(long n_root);

 private:
  long n_ = 0;             // 0 = rational integer
  std::vector<Int> c_;     // ascending, length <= phi(N), trailing zeros trimmed

  void trim();
  static CycInt reduced(long n_root, std::vector<Int> raw);
  friend CycInt promote(const CycInt& v, long n_root);
};

bool is_zero(const CycInt& a);

/// Exact quotient a/b in Z[zeta_N] (b | a); via multiplication by the
/// remaining Galois conjugates and division by the rational norm.
CycInt divexact(const CycInt& a, const CycInt& b);

long euler_phi(long n);

}  // namespace elltower
