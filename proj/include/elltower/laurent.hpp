#pragma once

#include <utility>
#include <vector>

#include "elltower/intutil.hpp"

namespace elltower {

/// Dense polynomial over a commutative integral domain R, ascending
/// coefficients, canonical form (no stored leading zeros). R needs +, -, *,
/// ==, unary -, a default constructor equal to zero, and ADL-reachable
/// is_zero / divexact.
template <class R>
struct Poly {
  std::vector<R> c;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c(std::move(coeffs)) { normalize(); }
  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }

  void normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
  const R& lead() const { return c.back(); }

  bool operator==(const Poly&) const = default;

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < c.size()) r.c[i] = r.c[i] + c[i];
      if (i < o.c.size()) r.c[i] = r.c[i] + o.c[i];
    }
    r.normalize();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (zero() || o.zero()) return {};
    Poly r;
    r.c.resize(c.size() + o.c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (is_zero(c[i])) continue;
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    r.normalize();
    return r;
  }

  R eval(const R& point) const {
    R acc{};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * point + c[i];
    return acc;
  }

  Poly derivative() const {
    Poly r;
    for (std::size_t i = 1; i < c.size(); ++i) {
      R term = c[i];
      for (std::size_t k = 1; k < i; ++k) term = term + c[i];
      r.c.push_back(term);
    }
    r.normalize();
    return r;
  }

  /// x^k * p
  Poly shifted(long k) const {
    if (zero()) return {};
    Poly r;
    r.c.assign(c.size() + k, R{});
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }
};

/// Exact quotient a/b when b divides a in R[x].
template <class R>
Poly<R> divexact(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) fail(errc::internal, "polynomial division by zero");
  Poly<R> rem = a, q;
  if (a.zero()) return q;
  q.c.assign(a.c.size() - b.c.size() + 1, R{});
  while (!rem.zero() && rem.degree() >= b.degree()) {
    R coef = divexact(rem.lead(), b.lead());
    long d = rem.degree() - b.degree();
    q.c[d] = coef;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[d + i] = rem.c[d + i] - coef * b.c[i];
    rem.normalize();
  }
  if (!rem.zero()) fail(errc::internal, "inexact polynomial division");
  q.normalize();
  return q;
}

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.zero();
}

/// Laurent polynomial: x^low * poly, canonical (poly has nonzero constant
/// term whenever it is nonzero; zero is {low = 0, poly = 0}).
template <class R>
struct LaurentPoly {
  long low = 0;
  Poly<R> p;

  LaurentPoly() = default;
  LaurentPoly(long low_exp, Poly<R> poly) : low(low_exp), p(std::move(poly)) { normalize(); }
  static LaurentPoly monomial(long e, R coeff) {
    return LaurentPoly(e, Poly<R>::constant(std::move(coeff)));
  }
  static LaurentPoly constant(R coeff) { return monomial(0, std::move(coeff)); }

  void normalize() {
    p.normalize();
    if (p.zero()) {
      low = 0;
      return;
    }
    std::size_t drop = 0;
    while (drop < p.c.size() && is_zero(p.c[drop])) ++drop;
    if (drop > 0) {
      p.c.erase(p.c.begin(), p.c.begin() + drop);
      low += static_cast<long>(drop);
    }
  }
  bool zero() const { return p.zero(); }
  long high() const { return low + p.degree(); }

  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly operator-() const { return LaurentPoly(low, -p); }
  LaurentPoly operator+(const LaurentPoly& o) const {
    if (zero()) return o;
    if (o.zero()) return *this;
    long nl = std::min(low, o.low);
    return LaurentPoly(nl, p.shifted(low - nl) + o.p.shifted(o.low - nl));
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    if (zero() || o.zero()) return {};
    return LaurentPoly(low + o.low, p * o.p);
  }
};

template <class R>
bool is_zero(const LaurentPoly<R>& p) {
  return p.zero();
}

/// Fraction-free (Bareiss) determinant over R[x]. Pivot: smallest degree,
/// lowest row. Exact in any integral domain.
template <class R>
Poly<R> det_poly(Matrix<Poly<R>> m) {
  std::size_t n = m.rows();
  if (n != m.cols() || n == 0) fail(errc::internal, "determinant needs a nonempty square matrix");
  int sign = 1;
  Poly<R> prev;  // previous pivot; empty means 1 on the first step
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).zero()) continue;
      if (piv == n || m(i, k).degree() < m(piv, k).degree()) piv = i;
    }
    if (piv == n) return {};  // zero column
    if (piv != k) {
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly<R> num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = prev.zero() ? std::move(num) : divexact(num, prev);
      }
      m(i, k) = Poly<R>{};
    }
    prev = m(k, k);
  }
  Poly<R> det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

/// Determinant of a matrix of Laurent polynomials: clear each row to
/// polynomial form, run Bareiss, restore the cleared power of x.
template <class R>
LaurentPoly<R> det_laurent(const Matrix<LaurentPoly<R>>& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) fail(errc::internal, "determinant of a non-square matrix");
  if (n == 0) fail(errc::internal, "empty determinant");
  long total_low = 0;
  Matrix<Poly<R>> cleared(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    long row_low = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).zero()) continue;
      row_low = any ? std::min(row_low, m(i, j).low) : m(i, j).low;
      any = true;
    }
    if (!any) return {};  // zero row
    total_low += row_low;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).zero()) cleared(i, j) = m(i, j).p.shifted(m(i, j).low - row_low);
  }
  return LaurentPoly<R>(total_low, det_poly(std::move(cleared)));
}

using IntPoly = Poly<Int>;

/// F(T) = x^{shift} p(x) at x = 1+T, shift = -low_exponent; exact Horner.
inline std::pair<IntPoly, long> shift_to_T(const LaurentPoly<Int>& p) {
  long shift = -p.low;
  IntPoly acc;
  IntPoly base(std::vector<Int>{1, 1});  // 1 + T
  for (std::size_t i = p.p.c.size(); i-- > 0;)
    acc = acc * base + IntPoly::constant(p.p.c[i]);
  return {acc, shift};
}

/// Substitute x -> 1+T coefficient-wise over any ring.
template <class R>
Poly<R> substitute_one_plus_t(const Poly<R>& p, const R& one) {
  Poly<R> acc;
  Poly<R> base(std::vector<R>{one, one});
  for (std::size_t i = p.c.size(); i-- > 0;)
    acc = acc * base + Poly<R>::constant(p.c[i]);
  return acc;
}

}  // namespace elltower
