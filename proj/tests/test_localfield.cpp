#include <doctest.h>

#include <numeric>
#include <random>

#include "elltower/abelian.hpp"
#include "elltower/localfield.hpp"

using namespace elltower;

TEST_CASE("field shapes for the worked examples") {
  LocalField q3i(3, 4, 32);  // Q_3(i): unramified quadratic
  CHECK(q3i.residue_degree() == 2);
  CHECK(q3i.ramification_index() == 1);
  CHECK(q3i.valuation(q3i.from_integer(3)).value == 1);

  LocalField q2w(2, 6, 32);  // Q_2(zeta_6) = Q_2(zeta_3): unramified quadratic
  CHECK(q2w.residue_degree() == 2);
  CHECK(q2w.ramification_index() == 1);

  LocalField q39(3, 9, 32);  // Q_3(zeta_9): totally ramified of degree 6
  CHECK(q39.residue_degree() == 1);
  CHECK(q39.ramification_index() == 6);
  CHECK(static_cast<long>(q39.eisenstein().size()) == 7);
  CHECK(q39.eisenstein()[0] == 3);  // constant term of Phi_9(1+x)

  CHECK_THROWS_AS(LocalField(4, 6, 32), error);   // ell must be prime
  CHECK_THROWS_AS(LocalField(3, 4, 4), error);    // precision too low
}

TEST_CASE("zeta_N has exact order N") {
  for (auto [ell, n_root] : {std::pair{3L, 4L}, {2L, 6L}, {3L, 9L}, {2L, 12L}, {3L, 12L},
                             {5L, 4L}, {2L, 2L}, {7L, 6L}}) {
    LocalField l(ell, n_root, 16);
    LocalElem z = l.zeta();
    CHECK(z.pow(n_root) == l.one());
    for (long d = 1; d < n_root; ++d)
      if (n_root % d == 0) CHECK_FALSE(z.pow(d) == l.one());
  }
}

TEST_CASE("defining relations are preserved by embedding") {
  LocalField l(3, 4, 32);
  LocalElem i = l.embed(CycInt::zeta_power(4, 1));
  CHECK(i * i == l.from_integer(-1));
  CHECK(l.embed(CycInt(1)) == l.one());
}

TEST_CASE("split case ell = 5, N = 4: the canonical root") {
  LocalField l(5, 4, 32);
  CHECK(l.residue_degree() == 1);
  LocalElem i = l.embed(CycInt::zeta_power(4, 1));
  CHECK(i * i == l.from_integer(-1));
  // canonical factor is x + 2 (lex-least constant-first), so i = -2 = 3 mod 5
  Int c0 = i.coords()[0];
  Int m5, m25;
  mpz_mod(m5.get_mpz_t(), c0.get_mpz_t(), Int(5).get_mpz_t());
  mpz_mod(m25.get_mpz_t(), c0.get_mpz_t(), Int(25).get_mpz_t());
  CHECK(m5 == 3);
  CHECK(m25 == 18);
}

TEST_CASE("valuations") {
  LocalField l26(2, 6, 32);
  CHECK(l26.valuation(l26.from_integer(2)).value == 1);
  CHECK(l26.valuation(l26.from_integer(2)).exact);
  // v(6) = 1: the content of the j = 3 character factor of the Z/6 example
  CHECK(l26.valuation(l26.embed(CycInt(6))).value == 1);

  Valuation zero_val = l26.valuation(l26.zero());
  CHECK_FALSE(zero_val.exact);

  LocalField l39(3, 9, 32);
  CHECK(l39.valuation(l39.from_integer(3)).value == 6);  // e = 6
  // pi = zeta_9 - 1 has valuation 1
  LocalElem pi = l39.embed(CycInt::zeta_power(9, 1)) - l39.one();
  CHECK(l39.valuation(pi).value == 1);
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  std::mt19937_64 rng(555);
  for (auto [ell, n_root] : {std::pair{3L, 4L}, {2L, 6L}, {3L, 12L}}) {
    LocalField l(ell, n_root, 48);
    long phi = euler_phi(n_root);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Int> ca(phi), cb(phi);
      for (long k = 0; k < phi; ++k) {
        ca[k] = static_cast<long>(rng() % 19) - 9;
        cb[k] = static_cast<long>(rng() % 19) - 9;
      }
      CycInt a = CycInt::from_coeffs(n_root, ca), b = CycInt::from_coeffs(n_root, cb);
      if (is_zero(a) || is_zero(b)) continue;
      LocalElem ea = l.embed(a), eb = l.embed(b);
      Valuation va = l.valuation(ea), vb = l.valuation(eb), vab = l.valuation(ea * eb);
      REQUIRE(va.exact);
      REQUIRE(vb.exact);
      REQUIRE(vab.exact);
      CHECK(vab.value == va.value + vb.value);
      if (!(ea + eb == l.zero())) {
        Valuation vsum = l.valuation(ea + eb);
        CHECK(vsum.value >= std::min(va.value, vb.value));
        if (va.value != vb.value) CHECK(vsum.value == std::min(va.value, vb.value));
      }
    }
  }
}

TEST_CASE("embedding is a ring homomorphism on random pairs") {
  std::mt19937_64 rng(777);
  LocalField l(2, 12, 32);
  long phi = euler_phi(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> ca(phi), cb(phi);
    for (long k = 0; k < phi; ++k) {
      ca[k] = static_cast<long>(rng() % 41) - 20;
      cb[k] = static_cast<long>(rng() % 41) - 20;
    }
    CycInt a = CycInt::from_coeffs(12, ca), b = CycInt::from_coeffs(12, cb);
    CHECK(l.embed(a * b) == l.embed(a) * l.embed(b));
    CHECK(l.embed(a + b) == l.embed(a) + l.embed(b));
  }
}

TEST_CASE("valuation is Galois-invariant under the decomposition group") {
  std::mt19937_64 rng(909);
  for (auto [ell, n_root] : {std::pair{3L, 4L}, {2L, 6L}, {2L, 12L}}) {
    LocalField l(ell, n_root, 32);
    auto dec = decomposition_group(n_root, ell);
    long phi = euler_phi(n_root);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Int> ca(phi);
      for (long k = 0; k < phi; ++k) ca[k] = static_cast<long>(rng() % 13) - 6;
      CycInt a = CycInt::from_coeffs(n_root, ca);
      if (is_zero(a)) continue;
      long va = l.valuation(l.embed(a)).value;
      for (long c : dec) CHECK(l.valuation(l.embed(a.conjugate(c))).value == va);
    }
  }
}

TEST_CASE("residues") {
  LocalField l39(3, 9, 32);
  // ramified roots of unity reduce to 1
  CHECK(l39.residue(l39.embed(CycInt::zeta_power(9, 1))) == l39.fq_from_int(1));
  CHECK(l39.fq_is_zero(l39.residue(l39.from_integer(3))));

  LocalField l34(3, 4, 32);
  auto u = l34.residue(l34.embed(CycInt::zeta_power(4, 1)));
  CHECK_FALSE(l34.fq_is_zero(u));
  auto u2 = l34.fq_mul(u, u);
  auto u4 = l34.fq_mul(u2, u2);
  CHECK(u2 != l34.fq_from_int(1));  // order exactly 4 in F_9
  CHECK(u4 == l34.fq_from_int(1));
  CHECK(l34.fq_is_zero(l34.residue(l34.from_integer(3))));
}

TEST_CASE("valuations near the precision cutoff report a bound only") {
  LocalField l(3, 4, 32);  // guard band 4: exact below 28
  Valuation near = l.valuation(l.from_integer(pow_int(Int(3), 27)));
  CHECK(near.exact);
  CHECK(near.value == 27);
  Valuation over = l.valuation(l.from_integer(pow_int(Int(3), 30)));
  CHECK_FALSE(over.exact);
  // doubling the precision resolves it
  LocalField wide(3, 4, 64);
  Valuation resolved = wide.valuation(wide.from_integer(pow_int(Int(3), 30)));
  CHECK(resolved.exact);
  CHECK(resolved.value == 30);
}

TEST_CASE("unit residues match zero valuation") {
  std::mt19937_64 rng(1234);
  LocalField l(3, 4, 32);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> ca(2);
    ca[0] = static_cast<long>(rng() % 21) - 10;
    ca[1] = static_cast<long>(rng() % 21) - 10;
    CycInt a = CycInt::from_coeffs(4, ca);
    if (is_zero(a)) continue;
    LocalElem ea = l.embed(a);
    bool unit = l.valuation(ea).value == 0;
    CHECK(unit == !l.fq_is_zero(l.residue(ea)));
  }
}
