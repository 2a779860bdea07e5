#pragma once

#include <cstddef>

namespace vlnaug::simd {

struct KernelTable {
  double (*reduce_max)(const double* x, std::size_t n);
  double (*sum_exp_shifted)(const double* x, std::size_t n, double shift);
  void (*add_scalar)(const double* x, std::size_t n, double c, double* out);
  void (*scaled_exp_shifted)(const double* x, std::size_t n, double shift, double scale,
                             double* out);
  void (*point_distances)(const double* xs, const double* ys, const double* zs,
                          std::size_t n, double px, double py, double pz, double* out);
};

const KernelTable& scalar_table();
// nullptr when the build carries no AVX2 code.
const KernelTable* avx2_table();

}  // namespace vlnaug::simd
