#pragma once

// Shared helpers for the unit and acceptance tests: fixture loading plus
// independent reference implementations used as oracles.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vlnaug/nav_graph.hpp"
#include "vlnaug/scene.hpp"

namespace testing {

inline const std::string kFixtures = VLNAUG_FIXTURE_DIR;
inline const std::string kDataDir = VLNAUG_DATA_DIR;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline vlnaug::SceneModel load_scene(const std::string& scan) {
  return vlnaug::parse_house(read_text(kFixtures + "/" + scan + ".house"));
}

inline vlnaug::NavGraph load_graph(const std::string& scan) {
  return vlnaug::parse_connectivity(
      read_text(kFixtures + "/" + scan + "_connectivity.json"), scan);
}

inline const std::vector<std::string>& fixture_scans() {
  static const std::vector<std::string> scans{"grid01", "house02", "tilted03"};
  return scans;
}

// SplitMix64 written out step by step from the published constants.
struct HandSplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    s = s + 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = z ^ (z >> 30);
    z = z * 0xBF58476D1CE4E5B9ULL;
    z = z ^ (z >> 27);
    z = z * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t k) {
    // 64×64 → 128 multiply via 32-bit halves, keeping the high word.
    const std::uint64_t x = next();
    const std::uint64_t xl = x & 0xffffffffULL, xh = x >> 32;
    const std::uint64_t kl = k & 0xffffffffULL, kh = k >> 32;
    const std::uint64_t ll = xl * kl, lh = xl * kh, hl = xh * kl, hh = xh * kh;
    const std::uint64_t mid = (ll >> 32) + (lh & 0xffffffffULL) + (hl & 0xffffffffULL);
    return hh + (lh >> 32) + (hl >> 32) + (mid >> 32);
  }
};

// Exhaustive enumeration of simple paths on a small adjacency matrix. Returns
// the minimum total weight from a to b (infinity when unreachable).
inline double brute_force_min_cost(const std::vector<std::vector<double>>& w, std::size_t a,
                                   std::size_t b) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a == b) return 0.0;
  double best = inf;
  std::vector<bool> used(w.size(), false);
  auto dfs = [&](auto&& self, std::size_t u, double cost) -> void {
    if (u == b) {
      best = std::min(best, cost);
      return;
    }
    for (std::size_t v = 0; v < w.size(); ++v) {
      if (used[v] || !(w[u][v] > 0.0)) continue;
      used[v] = true;
      self(self, v, cost + w[u][v]);
      used[v] = false;
    }
  };
  used[a] = true;
  dfs(dfs, a, 0.0);
  return best;
}

// Straightforward two-pass softmax NLL, no shift tricks beyond the max.
inline double naive_nll(const std::vector<double>& x, std::size_t t) {
  double m = x[0];
  for (double v : x) m = std::max(m, v);
  double s = 0.0;
  for (double v : x) s += std::exp(v - m);
  return -(x[t] - m - std::log(s));
}

}  // namespace testing
