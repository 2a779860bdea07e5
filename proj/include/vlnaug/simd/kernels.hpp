#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The variant is chosen once at first use from the CPU's capabilities; the
// VLNAUG_ISA environment variable ("scalar" or "avx2") overrides it.
//
// Distances and add_scalar are bit-identical across variants. The exp-based
// kernels agree to within a few ulp per element; sums may differ in the last
// bits because lane order changes the reduction order.

#include <span>

#include "vlnaug/vec3.hpp"

namespace vlnaug::simd {

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
// Throws vlnaug::Error when the ISA is not available on this machine/build.
void set_active_isa(Isa isa);

double reduce_max(std::span<const double> x);
// Σ exp(x_i − shift). Arguments x_i − shift must not exceed 709.
double sum_exp_shifted(std::span<const double> x, double shift);
// out_i = x_i + c
void add_scalar(std::span<const double> x, double c, std::span<double> out);
// out_i = scale · exp(x_i − shift)
void scaled_exp_shifted(std::span<const double> x, double shift, double scale,
                        std::span<double> out);
// out_i = |(xs_i, ys_i, zs_i) − p|
void point_distances(std::span<const double> xs, std::span<const double> ys,
                     std::span<const double> zs, const Vec3& p, std::span<double> out);

}  // namespace vlnaug::simd
