#include "elltower/complexity.hpp"

#include <algorithm>

#include "elltower/detkernels.hpp"

namespace elltower {

namespace {

// nearest-integer quotient keeps remainders small during the reduction
Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int babs = abs(b);
  if (2 * r > babs) q += 1;
  return q;
}

}  // namespace

std::vector<Int> smith_diagonal(Matrix<Int> m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest-magnitude nonzero entry in the trailing block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (is_zero(m(i, j))) continue;
        if (pi == rows || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // trailing block vanishes
    m.swap_rows(t, pi);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (is_zero(m(i, t))) continue;
      Int q = round_div(m(i, t), m(t, t));
      if (!is_zero(q))
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
      if (!is_zero(m(i, t))) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (is_zero(m(t, j))) continue;
      Int q = round_div(m(t, j), m(t, t));
      if (!is_zero(q))
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
      if (!is_zero(m(t, j))) clean = false;
    }
    if (!clean) continue;  // smaller pivot now exists; repeat this step

    // pivot must divide the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
          for (std::size_t jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }
  std::vector<Int> diag(std::min(rows, cols), Int(0));
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = abs(m(i, i));
  return diag;
}

PicardData picard(const Multigraph& x) {
  if (!x.is_connected()) fail(errc::disconnected, "Picard group needs a connected graph");
  auto diag = smith_diagonal(matrices(x).laplacian);
  long zeros = static_cast<long>(std::count_if(diag.begin(), diag.end(),
                                               [](const Int& v) { return is_zero(v); }));
  if (zeros != 1) fail(errc::internal, "Laplacian corank != 1 on a connected graph");
  PicardData out;
  out.kappa = 1;
  for (const Int& d : diag) {
    if (is_zero(d) || d == 1) continue;
    out.kappa *= d;
    out.invariant_factors.push_back(d);
  }
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

namespace {

Matrix<Int> reduced_laplacian(const Multigraph& x) {
  Matrix<Int> q = matrices(x).laplacian;
  std::size_t n = q.rows();
  if (n < 2) fail(errc::internal, "reduced Laplacian needs at least two vertices");
  Matrix<Int> r(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) r(i - 1, j - 1) = q(i, j);
  return r;
}

}  // namespace

Int complexity_det(const Multigraph& x) {
  if (!x.is_connected()) fail(errc::disconnected, "complexity needs a connected graph");
  if (x.vertex_count() == 1) return 1;
  return bareiss_det(reduced_laplacian(x));
}

std::pair<long, Int> ell_part(const Int& n, long ell) {
  if (!is_prime(ell)) fail(errc::not_prime, "ell must be prime");
  if (n < 1) fail(errc::internal, "ell_part needs a positive integer");
  Int unit;
  long e = static_cast<long>(
      mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), Int(ell).get_mpz_t()));
  return {e, unit};
}

long complexity_ell_exponent(const Multigraph& x, long ell) {
  if (!x.is_connected()) fail(errc::disconnected, "complexity needs a connected graph");
  if (x.vertex_count() == 1) return 0;
  return det_ell_valuation(reduced_laplacian(x), ell);
}

}  // namespace elltower
