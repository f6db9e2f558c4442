#include "elltower/localfield.hpp"

#include <algorithm>
#include <numeric>

namespace elltower {

namespace {

Int modp(const Int& v, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// --- dense integer polynomials with an explicit modulus (ascending) ---

using PolyZ = std::vector<Int>;

void trimz(PolyZ& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

PolyZ pm_mul(const PolyZ& a, const PolyZ& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& v : r) v = modp(v, m);
  trimz(r);
  return r;
}

PolyZ pm_add(PolyZ a, const PolyZ& b, const Int& m) {
  a.resize(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp(a[i] + b[i], m);
  for (auto& v : a) v = modp(v, m);
  trimz(a);
  return a;
}

PolyZ pm_sub(PolyZ a, const PolyZ& b, const Int& m) {
  a.resize(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp(a[i] - b[i], m);
  trimz(a);
  return a;
}

// division with remainder by a polynomial whose leading coefficient is
// invertible mod m; returns {quotient, remainder}
std::pair<PolyZ, PolyZ> pm_divmod(PolyZ num, const PolyZ& den, const Int& m) {
  Int lead_inv;
  if (mpz_invert(lead_inv.get_mpz_t(), den.back().get_mpz_t(), m.get_mpz_t()) == 0)
    fail(errc::internal, "non-invertible leading coefficient");
  PolyZ q;
  if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Int(0));
  while (num.size() >= den.size()) {
    Int coef = modp(num.back() * lead_inv, m);
    std::size_t shift = num.size() - den.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] = modp(num[shift + i] - coef * den[i], m);
    trimz(num);
    if (num.size() >= den.size() && num.size() == shift + den.size())
      fail(errc::internal, "division failed to reduce degree");
  }
  trimz(q);
  return {std::move(q), std::move(num)};
}

// extended euclid over F_ell: s*a + t*b = gcd (monic)
void pm_gcdext(const PolyZ& a, const PolyZ& b, const Int& ell, PolyZ& s, PolyZ& t, PolyZ& g) {
  PolyZ r0 = a, r1 = b, s0 = {Int(1)}, s1 = {}, t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    auto [q, r2] = pm_divmod(r0, r1, ell);
    PolyZ s2 = pm_sub(s0, pm_mul(q, s1, ell), ell);
    PolyZ t2 = pm_sub(t0, pm_mul(q, t1, ell), ell);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  Int lead_inv;
  if (mpz_invert(lead_inv.get_mpz_t(), r0.back().get_mpz_t(), ell.get_mpz_t()) == 0)
    fail(errc::internal, "gcd normalization failed");
  auto scale = [&](PolyZ& p) {
    for (auto& v : p) v = modp(v * lead_inv, ell);
  };
  scale(r0); scale(s0); scale(t0);
  g = std::move(r0);
  s = std::move(s0);
  t = std::move(t0);
}

// lexicographically-first (constant term first) monic degree-f divisor of
// poly over F_ell; every monic degree-f divisor of a squarefree product of
// degree-f irreducibles is itself irreducible
PolyZ canonical_factor(const PolyZ& poly, long ell, long f) {
  Int m(ell);
  PolyZ reduced = poly;
  for (auto& v : reduced) v = modp(v, m);
  trimz(reduced);
  if (static_cast<long>(reduced.size()) - 1 == f) return reduced;
  std::vector<long> digits(f, 0);
  while (true) {
    PolyZ cand(f + 1, Int(0));
    for (long i = 0; i < f; ++i) cand[i] = digits[i];
    cand[f] = 1;
    auto [q, r] = pm_divmod(reduced, cand, m);
    if (r.empty()) return cand;
    // odometer with the constant digit most significant (lex order)
    long pos = f - 1;
    while (pos >= 0 && digits[pos] == ell - 1) digits[pos--] = 0;
    if (pos < 0) fail(errc::internal, "no degree-f factor found");
    digits[pos]++;
  }
}

}  // namespace

LocalField::LocalField(long ell, long n_root, long precision)
    : ell_(ell), n_root_(n_root), precision_(precision) {
  if (!is_prime(ell)) fail(errc::not_prime, "ell must be prime");
  if (precision < 8) fail(errc::precision_too_low, "precision must be at least 8");
  if (n_root < 1) fail(errc::internal, "root-of-unity order must be positive");
  a_ = 0;
  m_prime_ = n_root;
  while (m_prime_ % ell == 0) {
    m_prime_ /= ell;
    ++a_;
  }
  long ell_pow_a = 1;
  for (long i = 0; i < a_; ++i) ell_pow_a *= ell;
  f_ = (m_prime_ == 1) ? 1 : mul_order_mod(ell % m_prime_, m_prime_);
  e_ = euler_phi(ell_pow_a);
  modulus_ = pow_int(Int(ell), static_cast<unsigned long>(precision));

  // unramified part: Hensel-lift the canonical factor of Phi_{m'}
  PolyZ phi_m = CycInt::cyclotomic_polynomial(m_prime_);
  Int lmod(ell);
  PolyZ h0 = canonical_factor(phi_m, ell, f_);
  if (f_ == static_cast<long>(phi_m.size()) - 1) {
    // the full cyclotomic polynomial; lift is itself over Z
    minpoly_ = phi_m;
    for (auto& v : minpoly_) v = modp(v, modulus_);
  } else {
    auto [q0, r0] = pm_divmod(phi_m, h0, lmod);
    if (!r0.empty()) fail(errc::internal, "canonical factor does not divide");
    PolyZ s, t, g;
    pm_gcdext(h0, q0, lmod, s, t, g);
    if (g.size() != 1) fail(errc::internal, "factor and cofactor are not coprime");
    PolyZ big_h = h0, big_q = q0;
    Int lk(ell);  // ell^k
    for (long k = 1; k < precision; ++k, lk *= ell) {
      Int mod_next = lk * ell;
      // d = (phi - H*Q) / ell^k mod ell
      PolyZ prod(std::max(big_h.size() + big_q.size(), phi_m.size()), Int(0));
      for (std::size_t i = 0; i < big_h.size(); ++i)
        for (std::size_t j = 0; j < big_q.size(); ++j) prod[i + j] += big_h[i] * big_q[j];
      PolyZ d(phi_m.size(), Int(0));
      for (std::size_t i = 0; i < d.size(); ++i) {
        Int diff = modp((i < phi_m.size() ? phi_m[i] : Int(0)) - prod[i], mod_next);
        d[i] = modp(divexact(diff, lk), lmod);
      }
      trimz(d);
      PolyZ td = pm_mul(t, d, lmod);
      auto [gamma, uu] = pm_divmod(td, h0, lmod);
      PolyZ ww = pm_add(pm_mul(s, d, lmod), pm_mul(gamma, q0, lmod), lmod);
      for (std::size_t i = 0; i < uu.size(); ++i) {
        if (i >= big_h.size()) big_h.resize(i + 1, Int(0));
        big_h[i] = modp(big_h[i] + lk * uu[i], mod_next);
      }
      for (std::size_t i = 0; i < ww.size(); ++i) {
        if (i >= big_q.size()) big_q.resize(i + 1, Int(0));
        big_q[i] = modp(big_q[i] + lk * ww[i], mod_next);
      }
    }
    minpoly_ = std::move(big_h);
    minpoly_.resize(f_ + 1, Int(0));
    // verify the lifted factorization
    PolyZ check = pm_mul(minpoly_, big_q, modulus_);
    PolyZ target = phi_m;
    for (auto& v : target) v = modp(v, modulus_);
    if (pm_sub(check, target, modulus_) != PolyZ{})
      fail(errc::internal, "Hensel lift verification failed");
  }
  minpoly_mod_ell_.assign(f_ + 1, 0);
  for (long i = 0; i <= f_; ++i) minpoly_mod_ell_[i] = mpz_get_si(modp(minpoly_[i], lmod).get_mpz_t());

  // ramified part: E(x) = Phi_{ell^a}(1+x)
  if (a_ >= 1) {
    PolyZ phi_la(ell_pow_a - ell_pow_a / ell + 1, Int(0));
    for (long k = 0; k < ell; ++k) phi_la[k * (ell_pow_a / ell)] = 1;
    // compose with 1+x (integer Horner)
    PolyZ acc;
    for (std::size_t i = phi_la.size(); i-- > 0;) {
      // acc = acc*(1+x) + phi_la[i]
      PolyZ next(acc.size() + 1, Int(0));
      for (std::size_t j = 0; j < acc.size(); ++j) {
        next[j] += acc[j];
        next[j + 1] += acc[j];
      }
      if (next.empty()) next.resize(1, Int(0));
      next[0] += phi_la[i];
      trimz(next);
      acc = std::move(next);
    }
    eisenstein_ = std::move(acc);
    if (static_cast<long>(eisenstein_.size()) - 1 != e_)
      fail(errc::internal, "Eisenstein degree mismatch");
  } else {
    eisenstein_ = {Int(0), Int(1)};
  }

  // zeta_N = zeta_{ell^a}^{c1} * zeta_{m'}^{c2} with CRT exponents
  LocalElem zm = one();
  if (m_prime_ > 1) {
    if (f_ == 1) {
      zm = from_integer(modp(-minpoly_[0], modulus_));
    } else {
      std::vector<Int> c(f_ * e_, Int(0));
      c[1 * e_ + 0] = 1;
      zm = LocalElem(this, std::move(c));
    }
  }
  LocalElem zl = one();
  if (a_ >= 1) {
    if (e_ == 1) {
      zl = from_integer(modp(Int(1) - eisenstein_[0], modulus_));
    } else {
      std::vector<Int> c(f_ * e_, Int(0));
      c[0 * e_ + 0] = 1;
      c[0 * e_ + 1] = 1;
      zl = LocalElem(this, std::move(c));
    }
  }
  LocalElem z = one();
  if (a_ >= 1) {
    long inv_m = 1;
    if (ell_pow_a > 1) {
      long mm = m_prime_ % ell_pow_a;
      long t = 1;
      while ((mm * t) % ell_pow_a != 1 % ell_pow_a) ++t;
      inv_m = t;
    }
    z = z * zl.pow(static_cast<unsigned long>(inv_m));
  }
  if (m_prime_ > 1) {
    long la = ell_pow_a % m_prime_;
    long t = 1;
    while ((la * t) % m_prime_ != 1 % m_prime_) ++t;
    z = z * zm.pow(static_cast<unsigned long>(t));
  }
  zeta_coords_ = z.coords();
}

LocalElem LocalField::zero() const { return LocalElem(this, std::vector<Int>(f_ * e_, Int(0))); }

LocalElem LocalField::one() const { return from_integer(1); }

LocalElem LocalField::from_integer(const Int& v) const {
  std::vector<Int> c(f_ * e_, Int(0));
  c[0] = modp(v, modulus_);
  return LocalElem(this, std::move(c));
}

LocalElem LocalField::embed(const CycInt& z) const {
  if (z.level() == 0) return from_integer(z.to_integer());
  if (z.level() != n_root_)
    fail(errc::incompatible_shapes, "cyclotomic level does not match the field");
  LocalElem acc = zero();
  const auto& c = z.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * zeta() + from_integer(c[i]);
  return acc;
}

std::vector<Int> LocalField::mul_raw(const std::vector<Int>& x, const std::vector<Int>& y) const {
  long uf = 2 * f_ - 1, ue = 2 * e_ - 1;
  std::vector<Int> conv(uf * ue, Int(0));
  for (long i1 = 0; i1 < f_; ++i1)
    for (long j1 = 0; j1 < e_; ++j1) {
      const Int& a = x[i1 * e_ + j1];
      if (is_zero(a)) continue;
      for (long i2 = 0; i2 < f_; ++i2)
        for (long j2 = 0; j2 < e_; ++j2) {
          const Int& b = y[i2 * e_ + j2];
          if (is_zero(b)) continue;
          conv[(i1 + i2) * ue + (j1 + j2)] += a * b;
        }
    }
  // reduce pi powers via the monic Eisenstein polynomial
  for (long j = ue - 1; j >= e_; --j)
    for (long i = 0; i < uf; ++i) {
      Int c = std::move(conv[i * ue + j]);
      conv[i * ue + j] = 0;
      if (is_zero(c)) continue;
      for (long t = 0; t < e_; ++t) conv[i * ue + (j - e_ + t)] -= c * eisenstein_[t];
    }
  // reduce u powers via the monic lifted minpoly
  for (long i = uf - 1; i >= f_; --i)
    for (long j = 0; j < e_; ++j) {
      Int c = std::move(conv[i * ue + j]);
      conv[i * ue + j] = 0;
      if (is_zero(c)) continue;
      for (long t = 0; t < f_; ++t) conv[(i - f_ + t) * ue + j] -= c * minpoly_[t];
    }
  std::vector<Int> out(f_ * e_);
  for (long i = 0; i < f_; ++i)
    for (long j = 0; j < e_; ++j) out[i * e_ + j] = modp(conv[i * ue + j], modulus_);
  return out;
}

LocalElem LocalElem::operator-() const {
  std::vector<Int> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[i] = is_zero(c_[i]) ? Int(0) : field_->modulus() - c_[i];
  return LocalElem(field_, std::move(c));
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
  std::vector<Int> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c[i] = c_[i] + o.c_[i];
    if (c[i] >= field_->modulus()) c[i] -= field_->modulus();
  }
  return LocalElem(field_, std::move(c));
}

LocalElem LocalElem::operator-(const LocalElem& o) const { return *this + (-o); }

LocalElem LocalElem::operator*(const LocalElem& o) const {
  return LocalElem(field_, field_->mul_raw(c_, o.c_));
}

LocalElem LocalElem::pow(unsigned long k) const {
  LocalElem acc = field_->one(), base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool LocalElem::operator==(const LocalElem& o) const { return c_ == o.c_; }

Valuation LocalField::valuation(const LocalElem& z) const {
  long best = -1;
  for (long j = 0; j < e_; ++j) {
    long vj = -1;  // min ell-adic valuation across u coordinates
    for (long i = 0; i < f_; ++i) {
      const Int& c = z.coords()[i * e_ + j];
      if (is_zero(c)) continue;
      long v = valuation_int(c, ell_);
      if (vj < 0 || v < vj) vj = v;
    }
    if (vj < 0) continue;  // whole column vanishes mod ell^precision
    long total = e_ * vj + j;
    if (best < 0 || total < best) best = total;
  }
  long cutoff = e_ * (precision_ - kGuardDigits);
  if (best >= 0 && best < cutoff) return {true, best};
  return {false, best >= 0 ? cutoff : e_ * precision_};
}

std::vector<long> LocalField::residue(const LocalElem& z) const {
  Valuation v = valuation(z);
  if (v.exact && v.value < 0) fail(errc::negative_valuation, "residue of a non-integral element");
  std::vector<long> out(f_, 0);
  for (long i = 0; i < f_; ++i)
    out[i] = mpz_get_si(modp(z.coords()[i * e_ + 0], Int(ell_)).get_mpz_t());
  return out;
}

std::vector<long> LocalField::fq_from_int(long v) const {
  std::vector<long> out(f_, 0);
  out[0] = ((v % ell_) + ell_) % ell_;
  return out;
}

std::vector<long> LocalField::fq_mul(const std::vector<long>& x, const std::vector<long>& y) const {
  std::vector<long> conv(2 * f_ - 1, 0);
  for (long i = 0; i < f_; ++i)
    for (long j = 0; j < f_; ++j) conv[i + j] = (conv[i + j] + x[i] * y[j]) % ell_;
  for (long d = 2 * f_ - 2; d >= f_; --d) {
    long c = conv[d] % ell_;
    conv[d] = 0;
    if (c == 0) continue;
    for (long t = 0; t < f_; ++t)
      conv[d - f_ + t] = ((conv[d - f_ + t] - c * minpoly_mod_ell_[t]) % ell_ + ell_) % ell_;
  }
  conv.resize(f_);
  for (auto& v : conv) v = ((v % ell_) + ell_) % ell_;
  return conv;
}

bool LocalField::fq_is_zero(const std::vector<long>& x) const {
  return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

}  // namespace elltower
