#include <doctest.h>

#include <map>
#include <set>

#include "corpus.hpp"
#include "elltower/voltage.hpp"

using namespace elltower;

namespace {

VoltageDatum ex1() { return {FiniteAbelianGroup{{4}}, {{1}, {2}, {3}}, {1, 0, -1}, 3}; }
VoltageDatum ex2() {
  return {FiniteAbelianGroup{{6}}, {{1}, {2}, {3}, {4}, {5}}, {1, 1, 0, -1, -1}, 2};
}

}  // namespace

TEST_CASE("voltage admissibility: the worked examples pass") {
  VoltageReport r1 = validate_voltage(ex1());
  CHECK(r1.antisymmetry_ok);
  CHECK(r1.condition4_ok);
  CHECK(r1.shortcut_applies);  // h = 1 has order 4 coprime to 3 and beta(1) = 1

  VoltageReport r2 = validate_voltage(ex2());
  CHECK(r2.antisymmetry_ok);
  CHECK(r2.condition4_ok);

  CHECK(ex1().m_beta() == 1);
  auto part = ex1().s_partition();
  REQUIRE(part.size() == 3);
  CHECK(part[0] == std::vector<int>{0});  // beta = 1
  CHECK(part[1] == std::vector<int>{1});  // beta = 0
  CHECK(part[2] == std::vector<int>{2});  // beta = -1
}

TEST_CASE("condition (4) fails when every voltage sum stays in ell Z") {
  VoltageDatum d{FiniteAbelianGroup{{4}}, {{1}, {2}, {3}}, {2, 0, -2}, 2};
  VoltageReport r = validate_voltage(d);
  CHECK(r.antisymmetry_ok);
  CHECK_FALSE(r.condition4_ok);
  CHECK_THROWS_AS(require_valid(d), error);
}

TEST_CASE("antisymmetry violations are caught") {
  VoltageDatum d{FiniteAbelianGroup{{4}}, {{1}, {2}, {3}}, {1, 0, 1}, 3};
  CHECK_FALSE(validate_voltage(d).antisymmetry_ok);
  VoltageDatum d2{FiniteAbelianGroup{{4}}, {{1}, {2}, {3}}, {1, 1, -1}, 3};
  CHECK_FALSE(validate_voltage(d2).antisymmetry_ok);  // beta(2) must vanish (2 = -2)
}

TEST_CASE("derived covers have the right shape") {
  VoltageDatum d = ex1();
  Multigraph base = build_cayley(d.group, d.gens);

  Multigraph level0 = derived_graph(base, d, 0);
  CHECK(level0.vertex_count() == base.vertex_count());
  CHECK(level0.edge_count() == base.edge_count());
  for (int e = 0; e < base.edge_count(); ++e) {
    CHECK(level0.edge(e).origin == base.edge(e).origin);
    CHECK(level0.edge(e).target == base.edge(e).target);
  }

  Multigraph level1 = derived_graph(base, d, 1);
  CHECK(level1.vertex_count() == 12);
  CHECK(level1.edge_count() == 36);
  for (int v = 0; v < level1.vertex_count(); ++v) CHECK(level1.degree(v) == 3);
  CHECK(level1.is_connected());

  VoltageDatum d2 = ex2();
  Multigraph base2 = build_cayley(d2.group, d2.gens);
  Multigraph cover2 = derived_graph(base2, d2, 1);
  CHECK(cover2.vertex_count() == 12);
  for (int v = 0; v < cover2.vertex_count(); ++v) CHECK(cover2.degree(v) == 5);
}

TEST_CASE("projection to the base is a cover: local bijection on edge stars") {
  for (VoltageDatum d : {ex1(), ex2()}) {
    Multigraph base = build_cayley(d.group, d.gens);
    for (long level : {1L, 2L}) {
      Multigraph cover = derived_graph(base, d, level);
      long fiber = 1;
      for (long i = 0; i < level; ++i) fiber *= d.ell;
      CHECK(cover.vertex_count() == base.vertex_count() * fiber);
      CHECK(cover.edge_count() == base.edge_count() * fiber);
      for (int w = 0; w < cover.vertex_count(); ++w) {
        int base_v = w / static_cast<int>(fiber);
        // out-edges of w must project bijectively onto out-edges of base_v
        std::multiset<int> projected;
        for (int e : cover.out_edges(w)) projected.insert(e / static_cast<int>(fiber));
        std::multiset<int> expected(base.out_edges(base_v).begin(),
                                    base.out_edges(base_v).end());
        CHECK(projected == expected);
      }
    }
  }
}

TEST_CASE("inversion and incidence are compatible on covers") {
  VoltageDatum d = ex2();
  Multigraph base = build_cayley(d.group, d.gens);
  Multigraph cover = derived_graph(base, d, 2);
  for (int e = 0; e < cover.edge_count(); ++e) {
    CHECK(cover.inverse(cover.inverse(e)) == e);
    CHECK(cover.edge(cover.inverse(e)).origin == cover.edge(e).target);
  }
}

TEST_CASE("the deck action is a graph automorphism") {
  VoltageDatum d = ex1();
  Multigraph base = build_cayley(d.group, d.gens);
  Multigraph cover = derived_graph(base, d, 1);
  long fiber = 3;
  // shift: (v, s) -> (v, s+1); edges (e, s) -> (e, s+1)
  std::map<std::pair<int, int>, int> edge_count;
  for (int e = 0; e < cover.edge_count(); ++e)
    edge_count[{cover.edge(e).origin, cover.edge(e).target}]++;
  auto shift = [&](int w) {
    return (w / fiber) * fiber + (w % fiber + 1) % fiber;
  };
  for (const auto& [key, count] : edge_count) {
    auto shifted = std::pair{shift(key.first), shift(key.second)};
    CHECK(edge_count[shifted] == count);
  }
}

TEST_CASE("tower connectivity matches cover connectivity at levels 1 and 2") {
  for (VoltageDatum d : {ex1(), ex2()}) {
    Multigraph base = build_cayley(d.group, d.gens);
    CHECK(tower_connected(base, d));
    CHECK(derived_graph(base, d, 1).is_connected());
    CHECK(derived_graph(base, d, 2).is_connected());
  }
  // scaling every voltage by ell kills surjectivity
  VoltageDatum scaled = ex1();
  for (auto& b : scaled.beta) b *= 3;
  Multigraph base = build_cayley(scaled.group, scaled.gens);
  CHECK_FALSE(tower_connected(base, scaled));
  CHECK_FALSE(derived_graph(base, scaled, 1).is_connected());
}

TEST_CASE("condition (4) implies a connected tower on the randomized corpus") {
  auto corpus = testsupport::make_corpus(2);
  REQUIRE(corpus.size() > 10);
  for (const auto& d : corpus) {
    Multigraph base = build_cayley(d.group, d.gens);
    CHECK(tower_connected(base, d));
    // surjectivity onto Z/ell decides every level
    if (d.ell <= 3) {
      CHECK(derived_graph(base, d, 1).is_connected());
      CHECK(derived_graph(base, d, 2).is_connected());
    }
  }
}
