#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vlnaug/saliency.hpp"

namespace vlnaug {

struct SamplerConfig {
  std::size_t n = 100;
  std::uint64_t seed = 42;
  std::size_t min_hops = 4;
  std::size_t max_hops = 7;
  double min_geodesic = 5.0;
};

// Auxiliary-task weights: λ for the objects term over top_n objects, β for
// the crafted term.
struct AuxConfig {
  double lambda = 0.5;
  double beta = 0.3;
  std::size_t top_n = 2;
};

struct RunConfig {
  SaliencyConfig saliency;
  SamplerConfig sampler;
  AuxConfig aux;
  std::optional<std::string> scene;
  std::optional<std::string> graph;
  std::optional<std::string> lexicon;
};

// `key = value` lines; '#' starts a comment. Unknown keys, duplicate keys and
// unparsable values raise ParseError with the line number. Missing keys keep
// their defaults. Referenced input files must exist.
RunConfig load_config(std::string_view text);

}  // namespace vlnaug
