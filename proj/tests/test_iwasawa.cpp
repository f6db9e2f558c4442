#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "elltower/complexity.hpp"
#include "elltower/iwasawa.hpp"

using namespace elltower;

namespace {

VoltageDatum ex1() { return {FiniteAbelianGroup{{4}}, {{1}, {2}, {3}}, {1, 0, -1}, 3}; }
VoltageDatum ex2() {
  return {FiniteAbelianGroup{{6}}, {{1}, {2}, {3}, {4}, {5}}, {1, 1, 0, -1, -1}, 2};
}

Multigraph graph_of(const VoltageDatum& d) { return build_cayley(d.group, d.gens); }

CycInt gauss(long re, long im) { return CycInt::from_coeffs(4, {Int(re), Int(im)}); }

std::vector<std::pair<long, long>> char_table(const VoltageDatum& d) {
  auto chars = characters(d.group);
  std::vector<CharFactor> cfs;
  for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
  compute_char_invariants(cfs, d.group, d.ell);
  std::vector<std::pair<long, long>> out;
  for (const auto& cf : cfs) out.emplace_back(cf.mu_psi, cf.lambda_psi);
  return out;
}

}  // namespace

TEST_CASE("voltage matrix of the Z/4 example") {
  VoltageDatum d = ex1();
  Multigraph x = graph_of(d);
  auto m = voltage_matrix(x, d);
  using LP = LaurentPoly<Int>;
  CHECK(m(0, 0) == LP::constant(Int(3)));
  CHECK(m(0, 1) == LP::monomial(-1, Int(-1)));  // beta(0 - 1) = beta(3) = -1
  CHECK(m(0, 2) == LP::monomial(0, Int(-1)));
  CHECK(m(0, 3) == LP::monomial(1, Int(-1)));   // beta(0 - 3) = beta(1) = 1

  // rows sum to zero at x = 1 (Laplacian specialization)
  for (int i = 0; i < 4; ++i) {
    Int row = 0;
    for (int j = 0; j < 4; ++j)
      if (!m(i, j).zero()) row += m(i, j).p.eval(1);
    CHECK(row == 0);
  }
}

TEST_CASE("iwasawa invariants of the Z/4, ell = 3 example") {
  VoltageDatum d = ex1();
  IwasawaResult r = iwasawa_series(graph_of(d), d);
  CHECK(r.shift == 4);
  CHECK(r.mu == 0);
  CHECK(r.lambda == 1);
  CHECK(r.F == IntPoly({0, 0, -64, -192, -224, -128, -40, -8, -1}));
  CHECK(r.F.c[0] == 0);  // divisible by T
  CHECK(r.F.c[2] == -64);
}

TEST_CASE("iwasawa invariants of the Z/6, ell = 2 example") {
  VoltageDatum d = ex2();
  IwasawaResult r = iwasawa_series(graph_of(d), d);
  CHECK(r.shift == 5);
  CHECK(r.mu == 2);
  CHECK(r.lambda == 9);
  CHECK(r.F == IntPoly({0, 0, -15552, -62208, -103680, -93312, -50112, -17280, -4032, -576,
                        -36}));
  // g_primitive = (F/T)/4
  CHECK(r.g_primitive.c[1] == -3888);
  CHECK(r.g_primitive.c.back() == -9);
}

TEST_CASE("iwasawa_series guards its preconditions") {
  // cycle graph: assumption fails
  VoltageDatum cyc{FiniteAbelianGroup{{5}}, {{1}, {4}}, {1, -1}, 3};
  CHECK_THROWS_AS(iwasawa_series(graph_of(cyc), cyc), error);
  // voltages scaled by ell: tower disconnected
  VoltageDatum scaled = ex1();
  for (auto& b : scaled.beta) b *= 3;
  try {
    iwasawa_series(graph_of(scaled), scaled);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::tower_disconnected);
  }
}

TEST_CASE("character factors of the Z/4 example match the closed form") {
  VoltageDatum d = ex1();
  auto chars = characters(d.group);
  // P_j = -i^{3j} x^2 + (3 - i^{2j}) x - i^j
  for (long j = 0; j < 4; ++j) {
    CharFactor cf = char_factor(d, chars[j]);
    REQUIRE(cf.a.size() == 3);
    CHECK(cf.a[0] == -CycInt::zeta_power(4, j));
    CHECK(cf.a[1] == CycInt(3) - CycInt::zeta_power(4, 2 * j));
    CHECK(cf.a[2] == -CycInt::zeta_power(4, 3 * j));
  }
  // explicit values: P_1 = i x^2 + 4x - i, P_2 = (x+1)^2
  CharFactor p1 = char_factor(d, chars[1]);
  CHECK(p1.a[0] == gauss(0, -1));
  CHECK(p1.a[1] == gauss(4, 0));
  CHECK(p1.a[2] == gauss(0, 1));
  CharFactor p2 = char_factor(d, chars[2]);
  CHECK(p2.a[0] == gauss(1, 0));
  CHECK(p2.a[1] == gauss(2, 0));
  CHECK(p2.a[2] == gauss(1, 0));
  // trivial character vanishes at T = 0
  CharFactor p0 = char_factor(d, chars[0]);
  CHECK(is_zero(p0.p_t.eval(CycInt())));
}

TEST_CASE("character factor of the Z/6 example at j = 3 is 6x") {
  VoltageDatum d = ex2();
  auto chars = characters(d.group);
  CharFactor p3 = char_factor(d, chars[3]);
  REQUIRE(p3.a.size() == 3);
  CHECK(is_zero(p3.a[0]));
  CHECK(p3.a[1] == CycInt(6));
  CHECK(is_zero(p3.a[2]));
  CHECK(p3.p_t == Poly<CycInt>({CycInt(6), CycInt(6)}));  // 6(T+1)
}

TEST_CASE("per-character invariants: Z/4 example") {
  auto table = char_table(ex1());
  REQUIRE(table.size() == 4);
  CHECK(table[0] == std::pair<long, long>{0, 2});
  CHECK(table[1] == std::pair<long, long>{0, 0});
  CHECK(table[2] == std::pair<long, long>{0, 0});
  CHECK(table[3] == std::pair<long, long>{0, 0});
}

TEST_CASE("per-character invariants: Z/6 example") {
  auto table = char_table(ex2());
  REQUIRE(table.size() == 6);
  CHECK(table[0] == std::pair<long, long>{1, 2});
  CHECK(table[1] == std::pair<long, long>{0, 2});
  CHECK(table[2] == std::pair<long, long>{0, 2});
  CHECK(table[3] == std::pair<long, long>{1, 0});
  CHECK(table[4] == std::pair<long, long>{0, 2});
  CHECK(table[5] == std::pair<long, long>{0, 2});
}

TEST_CASE("factorization identity holds exactly") {
  for (VoltageDatum d : {ex1(), ex2()}) CHECK(factorization_check(graph_of(d), d));
}

TEST_CASE("aggregation of invariants") {
  for (VoltageDatum d : {ex1(), ex2()}) {
    IwasawaResult r = iwasawa_series(graph_of(d), d);
    auto chars = characters(d.group);
    std::vector<CharFactor> cfs;
    for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
    auto [e, f] = compute_char_invariants(cfs, d.group, d.ell);
    CHECK(e == 1);  // both examples are unramified
    CHECK(f == 2);
    CHECK(aggregate_check(r, cfs, e));
    // mu = 0 iff all mu_psi = 0
    bool all_zero = std::all_of(cfs.begin(), cfs.end(),
                                [](const CharFactor& c) { return c.mu_psi == 0; });
    CHECK((r.mu == 0) == all_zero);
  }
}

TEST_CASE("orbit products have the frozen rational forms") {
  {
    VoltageDatum d = ex1();
    auto chars = characters(d.group);
    Poly<CycInt> prod = char_factor(d, chars[1]).p_t * char_factor(d, chars[3]).p_t;
    Poly<Int> expect({16, 32, 20, 4, 1});
    REQUIRE(prod.c.size() == expect.c.size());
    for (std::size_t i = 0; i < prod.c.size(); ++i) {
      REQUIRE(prod.c[i].is_rational());
      CHECK(prod.c[i].to_integer() == expect.c[i]);
    }
  }
  {
    VoltageDatum d = ex2();
    auto chars = characters(d.group);
    Poly<CycInt> prod = char_factor(d, chars[2]).p_t * char_factor(d, chars[4]).p_t;
    Poly<Int> expect = Poly<Int>({6, 6, 1}) * Poly<Int>({6, 6, 1});  // (T^2+6T+6)^2
    REQUIRE(prod.c.size() == expect.c.size());
    for (std::size_t i = 0; i < prod.c.size(); ++i) {
      REQUIRE(prod.c[i].is_rational());
      CHECK(prod.c[i].to_integer() == expect.c[i]);
    }
  }
}

TEST_CASE("orbit cross-checks pass on both examples") {
  for (VoltageDatum d : {ex1(), ex2()}) {
    IwasawaResult r = iwasawa_series(graph_of(d), d);
    auto chars = characters(d.group);
    std::vector<CharFactor> cfs;
    for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
    auto [e, f] = compute_char_invariants(cfs, d.group, d.ell);
    auto orbits = galois_orbits(d.group, d.ell);
    OrbitCheckReport rep = orbit_cross_check(d, orbits, cfs, r, e);
    CHECK(rep.all_ok);
    CHECK(rep.full_products_ok);
    for (const auto& entry : rep.orbits) CHECK(entry.rational);  // cyclic examples: all rational
  }
}

TEST_CASE("residue-field quick criteria") {
  {
    VoltageDatum d = ex1();
    QuickCriteria qc = quick_criteria(d);
    for (int i = 1; i < 4; ++i) CHECK(qc.nontrivial_unit[i] == 1);
    CHECK(qc.trivial_mu0_lambda2);   // sum beta^2 / 2 = 1, a 3-adic unit
    CHECK(qc.mu_zero_predicted);     // a singleton S_j away from m_beta
    CHECK_FALSE(qc.readings_disagree);
  }
  {
    VoltageDatum d = ex2();
    QuickCriteria qc = quick_criteria(d);
    CHECK_FALSE(qc.trivial_mu0_lambda2);  // sum beta^2 / 2 = 2, not a 2-adic unit
    CHECK_FALSE(qc.mu_zero_predicted);    // the only singleton sits at j = m_beta
    CHECK(qc.literal_singleton_exists);   // the j != 0 reading would wrongly force mu = 0
    CHECK(qc.readings_disagree);
  }
}

TEST_CASE("quick criteria agree with the computed invariants") {
  for (VoltageDatum d : {ex1(), ex2()}) {
    IwasawaResult r = iwasawa_series(graph_of(d), d);
    auto chars = characters(d.group);
    std::vector<CharFactor> cfs;
    for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
    compute_char_invariants(cfs, d.group, d.ell);
    CHECK(quick_criteria_agree(quick_criteria(d), cfs, r));
    // trivial character: lambda >= 2 and P'(0) = 0
    CHECK(cfs[0].lambda_psi >= 2);
    CycInt p_prime_0 = cfs[0].p_t.c.size() > 1 ? cfs[0].p_t.c[1] : CycInt();
    CHECK(is_zero(p_prime_0));
  }
}

TEST_CASE("ramified field aggregation: Z/8, ell = 2") {
  // e = 4, f = 1: the aggregation identity scales mu by the full
  // ramification index
  VoltageDatum d{FiniteAbelianGroup{{8}}, {{1}, {7}, {2}, {6}, {4}}, {1, -1, -1, 1, 0}, 2};
  Multigraph x = build_cayley(d.group, d.gens);
  IwasawaResult r = iwasawa_series(x, d);
  CHECK(r.shift == 7);
  CHECK(r.mu == 5);
  CHECK(r.lambda == 13);
  CHECK(r.F == IntPoly({0, 0, -332928, -1997568, -5178752, -7582720, -6867904, -3948544,
                        -1406720, -274432, -11648, 6272, 832, -128, -32}));
  auto chars = characters(d.group);
  std::vector<CharFactor> cfs;
  for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
  auto [e, f] = compute_char_invariants(cfs, d.group, d.ell);
  CHECK(e == 4);
  CHECK(f == 1);
  long mu_sum = 0, lambda_sum = 0;
  for (const auto& cf : cfs) {
    mu_sum += cf.mu_psi;
    lambda_sum += cf.lambda_psi;
  }
  CHECK(mu_sum == 4 * 5);
  CHECK(lambda_sum == 13 + 1);
  CHECK(factorization_check(x, d));
}

TEST_CASE("characters in one decomposition orbit share their invariants") {
  auto corpus = elltower::testsupport::make_corpus(1);
  std::size_t step = corpus.size() / 12 + 1;
  for (std::size_t idx = 0; idx < corpus.size(); idx += step) {
    const VoltageDatum& d = corpus[idx];
    auto chars = characters(d.group);
    std::vector<CharFactor> cfs;
    for (const auto& psi : chars) cfs.push_back(char_factor(d, psi));
    compute_char_invariants(cfs, d.group, d.ell);
    for (const auto& orbit : galois_orbits(d.group, d.ell).orbits)
      for (int i : orbit) {
        CHECK(cfs[i].mu_psi == cfs[orbit[0]].mu_psi);
        CHECK(cfs[i].lambda_psi == cfs[orbit[0]].lambda_psi);
      }
  }
}

TEST_CASE("precision escalation resolves deep coefficient valuations") {
  VoltageDatum d = ex1();
  auto chars = characters(d.group);
  CharFactor cf = char_factor(d, chars[1]);
  // plant a coefficient beyond the 32-digit guard band
  cf.p_t.c[0] = CycInt(pow_int(Int(3), 40));
  LocalField narrow(3, 4, 32);
  CHECK_FALSE(char_invariants(cf, narrow).has_value());
  std::vector<CharFactor> cfs{cf};
  auto [e, f] = compute_char_invariants(cfs, d.group, 3);
  CHECK(e == 1);
  CHECK(cfs[0].mu_psi == 0);  // the degree-1 coefficient 4 is still a unit
  CHECK(cfs[0].lambda_psi == 1);
}

TEST_CASE("scaling beta by a unit preserves the invariants") {
  {
    VoltageDatum d = ex1();
    IwasawaResult base = iwasawa_series(graph_of(d), d);
    VoltageDatum scaled = d;
    for (auto& b : scaled.beta) b *= 2;  // 2 is a unit mod 3
    IwasawaResult r = iwasawa_series(graph_of(scaled), scaled);
    CHECK(r.mu == base.mu);
    CHECK(r.lambda == base.lambda);
  }
  {
    VoltageDatum d = ex2();
    IwasawaResult base = iwasawa_series(graph_of(d), d);
    VoltageDatum scaled = d;
    for (auto& b : scaled.beta) b *= 3;  // 3 is a unit mod 2
    IwasawaResult r = iwasawa_series(graph_of(scaled), scaled);
    CHECK(r.mu == base.mu);
    CHECK(r.lambda == base.lambda);
  }
}

TEST_CASE("complete graph invariants") {
  {
    auto res = complete_graph_invariants(4, {1, 0, -1}, 3);
    CHECK(res.hypothesis_met);
    CHECK(res.prediction_holds);
    CHECK(res.series.mu == 0);
    CHECK(res.series.lambda == 1);
  }
  {
    auto res = complete_graph_invariants(6, {1, 1, 0, -1, -1}, 2);
    CHECK_FALSE(res.hypothesis_met);  // ell divides n
    CHECK(res.series.mu == 2);
    CHECK(res.series.lambda == 9);
  }
  {
    auto res = complete_graph_invariants(5, {1, 2, -2, -1}, 3);
    CHECK(res.hypothesis_met);  // sum beta^2 / 2 = 5, a 3-adic unit
    CHECK(res.prediction_holds);
  }
  CHECK_THROWS_AS(complete_graph_invariants(3, {1, -1}, 2), error);
}

TEST_CASE("tower growth for the Z/4 example") {
  VoltageDatum d = ex1();
  Multigraph x = graph_of(d);
  TowerReport rep = tower_report(x, d, 4, 0, 1);
  REQUIRE(rep.rows.size() == 5);
  long expect_e[5] = {0, 1, 2, 3, 4};
  long expect_v[5] = {4, 12, 36, 108, 324};
  for (int n = 0; n <= 4; ++n) {
    CHECK(rep.rows[n].e_n == expect_e[n]);
    CHECK(rep.rows[n].vertices == expect_v[n]);
  }
  REQUIRE(rep.nu.has_value());
  CHECK(*rep.nu == 0);
  CHECK(*rep.n0 == 0);
  CHECK_THROWS_AS(tower_report(x, d, 1, 0, 1), error);
}

TEST_CASE("tower growth for the Z/6 example") {
  VoltageDatum d = ex2();
  TowerReport rep = tower_report(graph_of(d), d, 3, 2, 9);
  REQUIRE(rep.rows.size() == 4);
  long expect_e[4] = {4, 11, 30, 47};
  for (int n = 0; n <= 3; ++n) CHECK(rep.rows[n].e_n == expect_e[n]);
  REQUIRE(rep.nu.has_value());
  CHECK(*rep.nu == 4);  // e_n = 2*2^n + 9n + 4 from n = 2 on
  CHECK(*rep.n0 == 2);
}
