// Times the serial reference kernels against the OpenMP variants on the
// reduced Laplacians of derived covers (the tower hot path).

#include <chrono>
#include <cstdio>
#include <string>

#include "elltower/complexity.hpp"
#include "elltower/detkernels.hpp"
#include "elltower/voltage.hpp"

using namespace elltower;

namespace {

Matrix<Int> reduced_laplacian_of_cover(const VoltageDatum& d, long level) {
  Multigraph base = build_cayley(d.group, d.gens);
  Multigraph cover = derived_graph(base, d, level);
  Matrix<Int> q = matrices(cover).laplacian;
  Matrix<Int> r(q.rows() - 1, q.cols() - 1);
  for (std::size_t i = 1; i < q.rows(); ++i)
    for (std::size_t j = 1; j < q.cols(); ++j) r(i - 1, j - 1) = q(i, j);
  return r;
}

template <class F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long max_level = argc > 1 ? std::stol(argv[1]) : 4;
  VoltageDatum d{FiniteAbelianGroup{{4}}, {{1}, {2}, {3}}, {1, 0, -1}, 3};

  std::printf("%-8s %-8s %-14s %-14s %-14s %-14s\n", "level", "size", "valdet-serial",
              "valdet-omp", "bareiss-serial", "bareiss-omp");
  for (long lev = 1; lev <= max_level; ++lev) {
    Matrix<Int> m = reduced_laplacian_of_cover(d, lev);
    long vs = 0, vp = 0;
    double t_vs = time_ms([&] { vs = det_ell_valuation_serial(m, d.ell); });
    double t_vp = time_ms([&] { vp = det_ell_valuation_parallel(m, d.ell); });
    if (vs != vp) {
      std::fprintf(stderr, "kernel mismatch at level %ld\n", lev);
      return 1;
    }
    double t_bs = -1, t_bp = -1;
    if (m.rows() <= 120) {
      Int ds, dp;
      t_bs = time_ms([&] { ds = bareiss_det_serial(m); });
      t_bp = time_ms([&] { dp = bareiss_det_parallel(m); });
      if (ds != dp) {
        std::fprintf(stderr, "bareiss mismatch at level %ld\n", lev);
        return 1;
      }
    }
    std::printf("%-8ld %-8zu %-14.1f %-14.1f %-14.1f %-14.1f\n", lev, m.rows(), t_vs, t_vp, t_bs,
                t_bp);
  }
  return 0;
}
