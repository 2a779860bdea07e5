#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "kernel_table.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/simd/kernels.hpp"

namespace vlnaug::simd {

#ifndef VLNAUG_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(VLNAUG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  const char* env = std::getenv("VLNAUG_ISA");
  if (env && std::string_view(env) == "scalar") return Isa::kScalar;
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

const KernelTable& table() {
  return current().load(std::memory_order_relaxed) == Isa::kAvx2 ? *avx2_table()
                                                                  : scalar_table();
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error("simd kernel: span sizes differ");
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::kScalar) return true;
  return avx2_table() != nullptr && cpu_has_avx2();
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(std::string("instruction set '") + isa_name(isa) + "' is not available");
  }
  current().store(isa, std::memory_order_relaxed);
}

double reduce_max(std::span<const double> x) {
  if (x.empty()) throw Error("reduce_max: empty input");
  return table().reduce_max(x.data(), x.size());
}

double sum_exp_shifted(std::span<const double> x, double shift) {
  return table().sum_exp_shifted(x.data(), x.size(), shift);
}

void add_scalar(std::span<const double> x, double c, std::span<double> out) {
  require_same_size(x.size(), out.size());
  table().add_scalar(x.data(), x.size(), c, out.data());
}

void scaled_exp_shifted(std::span<const double> x, double shift, double scale,
                        std::span<double> out) {
  require_same_size(x.size(), out.size());
  table().scaled_exp_shifted(x.data(), x.size(), shift, scale, out.data());
}

void point_distances(std::span<const double> xs, std::span<const double> ys,
                     std::span<const double> zs, const Vec3& p, std::span<double> out) {
  require_same_size(xs.size(), out.size());
  require_same_size(ys.size(), out.size());
  require_same_size(zs.size(), out.size());
  table().point_distances(xs.data(), ys.data(), zs.data(), xs.size(), p.x, p.y, p.z,
                          out.data());
}

}  // namespace vlnaug::simd
