#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "elltower/errors.hpp"

namespace elltower {

using Int = mpz_class;

inline bool is_zero(const Int& a) { return mpz_sgn(a.get_mpz_t()) == 0; }

/// Quotient a/b when b exactly divides a.
inline Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Multiplicity of the prime ell in n; n must be nonzero.
inline long valuation_int(const Int& n, long ell) {
  if (is_zero(n)) fail(errc::internal, "valuation of zero integer");
  Int rest, f = ell;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), f.get_mpz_t()));
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long mul_order_mod(long g, long m) {
  // multiplicative order of g modulo m; gcd(g, m) must be 1
  long o = 1, cur = ((g % m) + m) % m;
  while (cur != 1) {
    cur = (cur * g) % m;
    ++o;
    if (o > m) fail(errc::internal, "order computation diverged");
  }
  return o;
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& init = T())
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool operator==(const Matrix&) const = default;

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

}  // namespace elltower
