#include "elltower/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace elltower {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

// exact division of integer polynomials (ascending), divisor monic
std::vector<Int> poly_divexact_monic(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  for (std::size_t shift = q.size(); shift-- > 0;) {
    Int coef = num[shift + den.size() - 1];
    if (is_zero(coef)) continue;
    q[shift] = coef;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= coef * den[i];
  }
  for (const Int& v : num)
    if (!is_zero(v)) fail(errc::internal, "inexact cyclotomic division");
  return q;
}

std::map<long, std::vector<Int>>& cyclo_cache() {
  static std::map<long, std::vector<Int>> cache;
  return cache;
}
std::mutex cyclo_mutex;

std::vector<Int> compute_cyclotomic(long n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divexact_monic(std::move(num), CycInt::cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

const std::vector<Int>& CycInt::cyclotomic_polynomial(long n_root) {
  if (n_root < 1) fail(errc::internal, "cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lk(cyclo_mutex);
    auto it = cyclo_cache().find(n_root);
    if (it != cyclo_cache().end()) return it->second;
  }
  if (n_root == 1) {
    std::lock_guard<std::mutex> lk(cyclo_mutex);
    return cyclo_cache().emplace(1, std::vector<Int>{-1, 1}).first->second;
  }
  auto poly = compute_cyclotomic(n_root);
  std::lock_guard<std::mutex> lk(cyclo_mutex);
  return cyclo_cache().emplace(n_root, std::move(poly)).first->second;
}

void CycInt::trim() {
  while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  if (c_.empty()) n_ = n_ == 1 ? 1 : n_;  // keep level; zero compares equal anyway
}

CycInt CycInt::reduced(long n_root, std::vector<Int> raw) {
  // fold exponents modulo N (zeta^N = 1), then reduce by Phi_N
  if (static_cast<long>(raw.size()) > n_root) {
    std::vector<Int> folded(n_root, Int(0));
    for (std::size_t i = 0; i < raw.size(); ++i) folded[i % n_root] += raw[i];
    raw = std::move(folded);
  }
  const auto& phi = cyclotomic_polynomial(n_root);
  std::size_t deg_phi = phi.size() - 1;
  while (raw.size() > deg_phi) {
    Int lead = raw.back();
    std::size_t d = raw.size() - 1;
    if (!is_zero(lead)) {
      for (std::size_t i = 0; i < phi.size(); ++i) raw[d - deg_phi + i] -= lead * phi[i];
    }
    raw.pop_back();
  }
  CycInt r;
  r.n_ = n_root;
  r.c_ = std::move(raw);
  r.trim();
  return r;
}

CycInt CycInt::zeta_power(long n_root, long k) {
  k = ((k % n_root) + n_root) % n_root;
  std::vector<Int> raw(k + 1, Int(0));
  raw[k] = 1;
  return reduced(n_root, std::move(raw));
}

CycInt CycInt::from_coeffs(long n_root, std::vector<Int> raw) {
  return reduced(n_root, std::move(raw));
}

std::vector<Int> CycInt::padded_coeffs() const {
  std::size_t want = n_ == 0 ? 1 : static_cast<std::size_t>(euler_phi(n_));
  std::vector<Int> out = c_;
  out.resize(std::max(out.size(), want), Int(0));
  return out;
}

bool CycInt::is_rational() const { return c_.size() <= 1; }

Int CycInt::to_integer() const {
  if (!is_rational()) fail(errc::internal, "cyclotomic element is not rational");
  return c_.empty() ? Int(0) : c_[0];
}

CycInt promote(const CycInt& v, long n_root) {
  if (v.n_ == n_root || n_root == 0) return v;
  if (v.n_ == 0) {
    CycInt r;
    r.n_ = n_root;
    r.c_ = v.c_;
    r.trim();
    return r;
  }
  fail(errc::incompatible_shapes, "mixing cyclotomic levels");
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
  long n = n_ ? n_ : o.n_;
  CycInt a = promote(*this, n), b = promote(o, n);
  std::vector<Int> raw(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) raw[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) raw[i] += b.c_[i];
  CycInt r;
  r.n_ = n;
  r.c_ = std::move(raw);
  r.trim();
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
  long n = n_ ? n_ : o.n_;
  CycInt a = promote(*this, n), b = promote(o, n);
  if (a.c_.empty() || b.c_.empty()) {
    CycInt r;
    r.n_ = n;
    return r;
  }
  std::vector<Int> raw(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
  }
  if (n == 0) {
    CycInt r;
    r.n_ = 0;
    r.c_ = std::move(raw);
    r.trim();
    return r;
  }
  return reduced(n, std::move(raw));
}

bool CycInt::operator==(const CycInt& o) const {
  long n = n_ ? n_ : o.n_;
  CycInt a = promote(*this, n), b = promote(o, n);
  return a.c_ == b.c_;
}

CycInt CycInt::conjugate(long c) const {
  if (n_ == 0) return *this;
  c = ((c % n_) + n_) % n_;
  if (std::gcd(c, n_) != 1) fail(errc::bad_galois_index, "conjugation index not coprime to N");
  std::vector<Int> raw(n_, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) raw[(i * c) % n_] += c_[i];
  return reduced(n_, std::move(raw));
}

bool is_zero(const CycInt& a) { return a.coeffs().empty(); }

CycInt divexact(const CycInt& a, const CycInt& b) {
  if (is_zero(b)) fail(errc::internal, "cyclotomic division by zero");
  if (b.is_rational()) {
    Int d = b.to_integer();
    std::vector<Int> out = a.coeffs();
    for (auto& v : out) v = divexact(v, d);
    return CycInt::from_coeffs(a.level() ? a.level() : 1, std::move(out));
  }
  long n = b.level();
  CycInt num = a;
  CycInt norm = b;
  for (long c = 2; c < n; ++c) {
    if (std::gcd(c, n) != 1) continue;
    CycInt conj = b.conjugate(c);
    num = num * conj;
    norm = norm * conj;
  }
  if (!norm.is_rational()) fail(errc::internal, "norm is not rational");
  Int d = norm.to_integer();
  std::vector<Int> out = num.padded_coeffs();
  for (auto& v : out) v = divexact(v, d);
  return CycInt::from_coeffs(n, std::move(out));
}

}  // namespace elltower
