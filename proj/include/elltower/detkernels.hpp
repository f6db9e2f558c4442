#pragma once

#include "elltower/intutil.hpp"

namespace elltower {

/// Fraction-free (Bareiss) determinant of an integer matrix; exact over Z.
/// The serial variant is the reference; the parallel variant distributes the
/// row updates with OpenMP and returns bit-identical results.
Int bareiss_det_serial(Matrix<Int> m);
Int bareiss_det_parallel(Matrix<Int> m);
Int bareiss_det(Matrix<Int> m);  // parallel when built with OpenMP

/// ell-adic valuation of det(m) for a nonsingular integer matrix, computed by
/// valuation-tracking elimination over Z/ell^B: each column is pivoted on the
/// entry of minimal valuation, the pivot valuations sum to v_ell(det), and
/// the working precision shrinks by the pivot valuation at every step.
/// B starts at `start_digits` and doubles until the precision budget survives
/// the elimination; past `cap_digits` the matrix is treated as singular.
long det_ell_valuation_serial(const Matrix<Int>& m, long ell, long start_digits = 64,
                              long cap_digits = 4096);
long det_ell_valuation_parallel(const Matrix<Int>& m, long ell, long start_digits = 64,
                                long cap_digits = 4096);
long det_ell_valuation(const Matrix<Int>& m, long ell, long start_digits = 64,
                       long cap_digits = 4096);

}  // namespace elltower
