#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlnaug/crafter.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/nav_graph.hpp"
#include "vlnaug/saliency.hpp"
#include "vlnaug/scene.hpp"

namespace vlnaug {

class InstructionParseError : public Error {
 public:
  InstructionParseError(std::size_t clause_index, std::string fragment)
      : Error("clause " + std::to_string(clause_index) + ": unrecognized '" + fragment + "'"),
        clause_index_(clause_index),
        fragment_(std::move(fragment)) {}

  std::size_t clause_index() const { return clause_index_; }
  const std::string& fragment() const { return fragment_; }

 private:
  std::size_t clause_index_;
  std::string fragment_;
};

// Inverse of the crafter's rendering.
std::vector<AtomicInstruction> parse_crafted(std::string_view text);

struct ExecutionResult {
  std::vector<std::string> path;
  double final_heading = 0.0;
  bool stopped = false;
  std::optional<std::string> failure_reason;
};

// Follows atoms over the graph. Each move picks the neighbor whose heading is
// closest to the turn class centre, preferring (by a π score offset)
// neighbors whose best object matches the atom's referenced category.
ExecutionResult execute(const NavGraph& graph, const SceneModel& scene, std::string_view start,
                        double heading_0, const std::vector<AtomicInstruction>& atoms,
                        const SaliencyConfig& cfg);

struct NavMetrics {
  double pl = 0.0;   // path length, m
  double ne = 0.0;   // navigation error, m
  double sr = 0.0;   // success
  double spl = 0.0;  // success weighted by path length

  friend bool operator==(const NavMetrics&, const NavMetrics&) = default;
};

inline constexpr double kDefaultSuccessRadius = 3.0;

NavMetrics evaluate(const NavGraph& graph, const PathSpec& gold, const ExecutionResult& result,
                    double success_radius = kDefaultSuccessRadius);

// Component-wise mean; zeros for an empty batch.
NavMetrics mean_metrics(const std::vector<NavMetrics>& batch);

}  // namespace vlnaug
