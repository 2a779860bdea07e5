// Compiled with -mavx2 only. FMA stays disabled so products and sums round
// exactly like the scalar reference.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernel_table.hpp"

namespace vlnaug::simd {
namespace {

// Cephes-style exp: n = round(x·log2 e), r = x − n·ln 2 split in two parts,
// Padé approximant on r, then scale by 2^n through the exponent bits.
__m256d exp_pd(__m256d x) {
  const __m256d lo = _mm256_set1_pd(-7.08396418532264106224e2);
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d fx = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_sub_pd(x, _mm256_mul_pd(fx, _mm256_set1_pd(6.93145751953125e-1)));
  x = _mm256_sub_pd(x, _mm256_mul_pd(fx, _mm256_set1_pd(1.42860682030941723212e-6)));

  const __m256d xx = _mm256_mul_pd(x, x);
  __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
  p = _mm256_add_pd(_mm256_mul_pd(p, xx), _mm256_set1_pd(3.02994407707441961300e-2));
  p = _mm256_add_pd(_mm256_mul_pd(p, xx), _mm256_set1_pd(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, x);
  __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
  q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.52448340349684104192e-3));
  q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.27265548208155028766e-1));
  q = _mm256_add_pd(_mm256_mul_pd(q, xx), _mm256_set1_pd(2.00000000000000000009e0));

  __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  r = _mm256_add_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(2.0), r));

  const __m128i n32 = _mm256_cvtpd_epi32(fx);
  __m256i bits = _mm256_cvtepi32_epi64(n32);
  bits = _mm256_slli_epi64(_mm256_add_epi64(bits, _mm256_set1_epi64x(1023)), 52);
  r = _mm256_mul_pd(r, _mm256_castsi256_pd(bits));
  return _mm256_blendv_pd(r, _mm256_setzero_pd(), underflow);
}

double horizontal_sum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double reduce_max(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m = x[0];
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  }
  for (; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double sum_exp_shifted(const double* x, std::size_t n, double shift) {
  const __m256d s = _mm256_set1_pd(shift);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, exp_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), s)));
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::exp(x[i] - shift);
  return total;
}

void add_scalar(const double* x, std::size_t n, double c, double* out) {
  const __m256d cv = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), cv));
  for (; i < n; ++i) out[i] = x[i] + c;
}

void scaled_exp_shifted(const double* x, std::size_t n, double shift, double scale,
                        double* out) {
  const __m256d s = _mm256_set1_pd(shift);
  const __m256d k = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_mul_pd(k, exp_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), s))));
  }
  for (; i < n; ++i) out[i] = scale * std::exp(x[i] - shift);
}

void point_distances(const double* xs, const double* ys, const double* zs, std::size_t n,
                     double px, double py, double pz, double* out) {
  const __m256d pxv = _mm256_set1_pd(px);
  const __m256d pyv = _mm256_set1_pd(py);
  const __m256d pzv = _mm256_set1_pd(pz);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), pxv);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), pyv);
    const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(zs + i), pzv);
    const __m256d sq = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                     _mm256_mul_pd(dz, dz));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
  }
  for (; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double dz = zs[i] - pz;
    out[i] = std::sqrt(dx * dx + dy * dy + dz * dz);
  }
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{reduce_max, sum_exp_shifted, add_scalar,
                                 scaled_exp_shifted, point_distances};
  return &table;
}

}  // namespace vlnaug::simd
