#pragma once

#include <utility>
#include <vector>

#include "elltower/intutil.hpp"
#include "elltower/multigraph.hpp"

namespace elltower {

/// Structure of the degree-zero Picard group: invariant factors d1 | d2 | ...
/// (units dropped) and their product kappa, the spanning-tree count.
struct PicardData {
  std::vector<Int> invariant_factors;
  Int kappa;
};

/// Smith normal form diagonal of an integer matrix (in-place algorithm,
/// smallest-magnitude pivoting); entries normalized nonnegative with the
/// divisibility chain enforced.
std::vector<Int> smith_diagonal(Matrix<Int> m);

/// Pic^0 via the Smith normal form of the Laplacian; requires connectivity.
PicardData picard(const Multigraph& x);

/// kappa via the reduced-Laplacian determinant (fraction-free elimination);
/// the Matrix-Tree cross-check for picard().
Int complexity_det(const Multigraph& x);

/// n = ell^e * unit with ell not dividing unit.
std::pair<long, Int> ell_part(const Int& n, long ell);

/// v_ell(kappa) via the modular reduced-Laplacian kernel; avoids full bigint
/// determinants on large covers.
long complexity_ell_exponent(const Multigraph& x, long ell);

}  // namespace elltower
