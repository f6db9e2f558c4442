#include "elltower/ihara.hpp"

#include <numeric>

#include "elltower/complexity.hpp"
#include "elltower/iwasawa.hpp"

namespace elltower {

TwistedAdjacency twisted_adjacency(const Multigraph& x, const VoltageDatum& d, long level,
                                   long char_exponent) {
  if (level < 1) fail(errc::internal, "twists need level >= 1");
  if (!tower_connected(x, d)) fail(errc::tower_disconnected, "tower is disconnected");
  long n_root = 1;
  for (long i = 0; i < level; ++i) n_root *= d.ell;
  int n = x.vertex_count();
  TwistedAdjacency out{level, char_exponent, Matrix<CycInt>(n, n, CycInt())};
  for (int e = 0; e < x.edge_count(); ++e) {
    long a = d.alpha(x, e);
    long k = ((char_exponent * a) % n_root + n_root) % n_root;
    auto ed = x.edge(e);
    out.matrix(ed.origin, ed.target) =
        out.matrix(ed.origin, ed.target) + CycInt::zeta_power(n_root, k);
  }
  return out;
}

Poly<CycInt> h_poly(const Multigraph& x, const TwistedAdjacency& a) {
  int n = x.vertex_count();
  Matrix<Poly<CycInt>> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<CycInt> c(3, CycInt());
      if (i == j) {
        c[0] = CycInt(1);
        c[2] = CycInt(x.degree(i) - 1);
      }
      c[1] = -a.matrix(i, j);
      m(i, j) = Poly<CycInt>(std::move(c));
    }
  return det_poly(std::move(m));
}

Poly<Int> h_poly_trivial(const Multigraph& x) {
  int n = x.vertex_count();
  Matrix<Int> adj = matrices(x).adjacency;
  Matrix<Poly<Int>> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Int> c(3, Int(0));
      if (i == j) {
        c[0] = 1;
        c[2] = x.degree(i) - 1;
      }
      c[1] = -adj(i, j);
      m(i, j) = Poly<Int>(std::move(c));
    }
  return det_poly(std::move(m));
}

std::pair<long, Poly<Int>> zeta_inverse(const Multigraph& x) {
  BaseReport base = validate_base(x);
  if (!base.assumption_ok) fail(errc::assumption_violated, "zeta needs the degree assumptions");
  return {-base.euler_characteristic, h_poly_trivial(x)};
}

bool class_number_check(const Multigraph& x) {
  BaseReport base = validate_base(x);
  if (!base.assumption_ok) fail(errc::assumption_violated, "check needs the degree assumptions");
  Poly<Int> h = h_poly_trivial(x);
  Int derivative_at_1 = h.derivative().eval(1);
  Int kappa = picard(x).kappa;
  return derivative_at_1 == Int(-2) * base.euler_characteristic * kappa;
}

bool artin_check(const Multigraph& x, const VoltageDatum& d, long level) {
  if (level == 0) return true;  // trivial cover: kappa_X == kappa_X
  long n_root = 1;
  for (long i = 0; i < level; ++i) n_root *= d.ell;
  CycInt prod = CycInt(1);
  for (long k = 1; k < n_root; ++k) {
    TwistedAdjacency tw = twisted_adjacency(x, d, level, k);
    Poly<CycInt> h = h_poly(x, tw);
    prod = prod * h.eval(CycInt(1));
  }
  if (!prod.is_rational()) fail(errc::non_rational_product, "Galois-stable product not rational");
  Int kappa_base = picard(x).kappa;
  Int kappa_cover = picard(derived_graph(x, d, level)).kappa;
  return Int(n_root) * kappa_cover == kappa_base * prod.to_integer();
}

bool special_value_check(const Multigraph& x, const VoltageDatum& d, long level) {
  if (level < 1) fail(errc::internal, "special values need level >= 1");
  long n_root = 1;
  for (long i = 0; i < level; ++i) n_root *= d.ell;
  IwasawaResult r = iwasawa_series(x, d);

  CycInt zeta = CycInt::zeta_power(n_root, 1);
  CycInt lhs;
  for (std::size_t i = r.det_x.c.size(); i-- > 0;) lhs = lhs * zeta + CycInt(r.det_x.c[i]);

  TwistedAdjacency tw = twisted_adjacency(x, d, level, 1);
  CycInt h1 = h_poly(x, tw).eval(CycInt(1));
  CycInt rhs = h1 * CycInt::zeta_power(n_root, r.shift % n_root);
  return lhs == rhs;
}

}  // namespace elltower
