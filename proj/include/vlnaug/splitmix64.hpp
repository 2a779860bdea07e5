#pragma once

#include <cstdint>

namespace vlnaug {

// SplitMix64 generator. The stream order is part of the path sampler's
// reproducibility contract, so the constants must not change.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, k) by the multiply-high method. k must be > 0.
  constexpr std::uint64_t below(std::uint64_t k) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * k) >> 64);
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace vlnaug
