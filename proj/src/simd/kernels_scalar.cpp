#include <algorithm>
#include <cmath>

#include "kernel_table.hpp"

namespace vlnaug::simd {
namespace {

double reduce_max(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double sum_exp_shifted(const double* x, std::size_t n, double shift) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::exp(x[i] - shift);
  return s;
}

void add_scalar(const double* x, std::size_t n, double c, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + c;
}

void scaled_exp_shifted(const double* x, std::size_t n, double shift, double scale,
                        double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = scale * std::exp(x[i] - shift);
}

void point_distances(const double* xs, const double* ys, const double* zs, std::size_t n,
                     double px, double py, double pz, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double dz = zs[i] - pz;
    out[i] = std::sqrt(dx * dx + dy * dy + dz * dz);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{reduce_max, sum_exp_shifted, add_scalar,
                                 scaled_exp_shifted, point_distances};
  return table;
}

}  // namespace vlnaug::simd
