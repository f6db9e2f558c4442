#pragma once

#include <vector>

#include "elltower/cyclotomic.hpp"
#include "elltower/laurent.hpp"
#include "elltower/multigraph.hpp"
#include "elltower/voltage.hpp"

namespace elltower {

/// Character-twisted adjacency matrix of a level-n cover: entries
/// sum over edges (v_i, v_j) of zeta_{ell^n}^{k alpha(e)} in Z[zeta_{ell^n}],
/// with fiber basepoints w_i = (v_i, 0).
struct TwistedAdjacency {
  long level;          // n
  long char_exponent;  // k: psi(sigma) = zeta_{ell^n}^{k sigma}
  Matrix<CycInt> matrix;
};

TwistedAdjacency twisted_adjacency(const Multigraph& x, const VoltageDatum& d, long level,
                                   long char_exponent);

/// Three-term determinant h(u, psi) = det(I - A_psi u + (D - I) u^2).
Poly<CycInt> h_poly(const Multigraph& x, const TwistedAdjacency& a);

/// Untwisted h(u) over the integers.
Poly<Int> h_poly_trivial(const Multigraph& x);

/// Inverse zeta function as (exponent of (1-u^2), h(u)): the pair represents
/// (1-u^2)^{-chi} h(u).
std::pair<long, Poly<Int>> zeta_inverse(const Multigraph& x);

/// h'(1) == -2 chi kappa (exact).
bool class_number_check(const Multigraph& x);

/// |G| kappa_Y == kappa_X * prod over nontrivial psi of h(1, psi) at the
/// level-n cover; the cyclotomic product must be rational.
bool artin_check(const Multigraph& x, const VoltageDatum& d, long level);

/// D(zeta_{ell^n}) == zeta^{shift} h(1, psi_n) in Z[zeta_{ell^n}], where
/// D(x) = x^{shift} det M(x) and psi_n(1) = zeta_{ell^n}.
bool special_value_check(const Multigraph& x, const VoltageDatum& d, long level);

}  // namespace elltower
