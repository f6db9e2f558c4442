#include "elltower/detkernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elltower {

namespace {

Int modp(const Int& v, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

template <bool Parallel>
Int bareiss_det_impl(Matrix<Int> m) {
  std::size_t n = m.rows();
  if (n != m.cols() || n == 0) fail(errc::internal, "determinant needs a nonempty square matrix");
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      if (piv == n || mpz_cmpabs(m(i, k).get_mpz_t(), m(piv, k).get_mpz_t()) < 0) piv = i;
    }
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(k, piv);
      sign = -sign;
    }
    const long lo = static_cast<long>(k) + 1, hi = static_cast<long>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel && hi - lo > 8)
#endif
    for (long i = lo; i < hi; ++i) {
      for (long j = lo; j < hi; ++j)
        m(i, j) = divexact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

// one elimination attempt at a fixed digit budget; returns the valuation or
// -1 when the precision budget is exhausted
template <bool Parallel>
long valdet_attempt(const Matrix<Int>& input, long ell, long digits) {
  std::size_t n = input.rows();
  Int modulus = pow_int(Int(ell), static_cast<unsigned long>(digits));
  Matrix<Int> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = modp(input(i, j), modulus);

  long budget = digits;  // entries are currently accurate mod ell^budget
  long total = 0;
  const long guard = 4;
  for (std::size_t k = 0; k < n; ++k) {
    Int cur_mod = pow_int(Int(ell), static_cast<unsigned long>(budget));
    std::size_t piv = n;
    long pivv = 0;
    for (std::size_t i = k; i < n; ++i) {
      Int r = modp(m(i, k), cur_mod);
      if (is_zero(r)) continue;
      long v = valuation_int(r, ell);
      if (piv == n || v < pivv) {
        piv = i;
        pivv = v;
      }
    }
    if (piv == n || budget - pivv <= guard) return -1;  // escalate
    if (piv != k) m.swap_rows(k, piv);
    total += pivv;
    Int shift = pow_int(Int(ell), static_cast<unsigned long>(pivv));
    Int next_mod = pow_int(Int(ell), static_cast<unsigned long>(budget - pivv));
    Int unit = modp(divexact(modp(m(k, k), cur_mod), shift), next_mod);
    Int unit_inv;
    mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), next_mod.get_mpz_t());
    const long lo = static_cast<long>(k) + 1, hi = static_cast<long>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel && hi - lo > 8)
#endif
    for (long i = lo; i < hi; ++i) {
      Int mult = modp(divexact(modp(m(i, k), cur_mod), shift) * unit_inv, next_mod);
      if (!is_zero(mult)) {
        for (long j = lo; j < hi; ++j) m(i, j) = modp(m(i, j) - mult * m(k, j), next_mod);
      }
      m(i, k) = 0;
    }
    budget -= pivv;
  }
  return total;
}

template <bool Parallel>
long det_ell_valuation_impl(const Matrix<Int>& m, long ell, long start_digits, long cap_digits) {
  if (!is_prime(ell)) fail(errc::not_prime, "ell must be prime");
  if (m.rows() != m.cols() || m.rows() == 0)
    fail(errc::internal, "determinant needs a nonempty square matrix");
  for (long digits = start_digits; digits <= cap_digits; digits *= 2) {
    long v = valdet_attempt<Parallel>(m, ell, digits);
    if (v >= 0) return v;
  }
  fail(errc::precision_exhausted, "determinant appears singular modulo ell^cap");
}

}  // namespace

Int bareiss_det_serial(Matrix<Int> m) { return bareiss_det_impl<false>(std::move(m)); }
Int bareiss_det_parallel(Matrix<Int> m) { return bareiss_det_impl<true>(std::move(m)); }
Int bareiss_det(Matrix<Int> m) { return bareiss_det_impl<true>(std::move(m)); }

long det_ell_valuation_serial(const Matrix<Int>& m, long ell, long start_digits,
                              long cap_digits) {
  return det_ell_valuation_impl<false>(m, ell, start_digits, cap_digits);
}
long det_ell_valuation_parallel(const Matrix<Int>& m, long ell, long start_digits,
                                long cap_digits) {
  return det_ell_valuation_impl<true>(m, ell, start_digits, cap_digits);
}
long det_ell_valuation(const Matrix<Int>& m, long ell, long start_digits, long cap_digits) {
  return det_ell_valuation_impl<true>(m, ell, start_digits, cap_digits);
}

}  // namespace elltower
