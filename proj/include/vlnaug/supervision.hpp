#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vlnaug/nav_graph.hpp"
#include "vlnaug/saliency.hpp"
#include "vlnaug/scene.hpp"

namespace vlnaug {

// Per-token supervision for the objects auxiliary task.
struct WordObjectSupervision {
  long long path_id = 0;
  std::vector<std::string> tokens;
  std::vector<std::size_t> node_of_token;
  std::vector<std::vector<std::string>> objects_of_token;

  friend bool operator==(const WordObjectSupervision&, const WordObjectSupervision&) = default;
};

// One R2R dataset entry.
struct DatasetRecord {
  long long path_id = 0;
  std::string scan;
  double heading = 0.0;
  std::vector<std::string> path;
  std::vector<std::string> instructions;
  double distance = 0.0;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

// Entry i is round_half_up(i·(K−1)/(L−1)); all zeros when L = 1.
std::vector<std::size_t> align_words_to_nodes(std::size_t token_count, std::size_t node_count);

// Head nouns of the first n distinct candidates ranked by area (desc), then
// distance, then object index.
std::vector<std::string> top_n_objects(const SceneModel& scene, const NavGraph& graph,
                                       std::string_view node, const SaliencyConfig& cfg,
                                       std::size_t n);

WordObjectSupervision build_supervision(const SceneModel& scene, const NavGraph& graph,
                                        const PathSpec& path, std::string_view instruction,
                                        const SaliencyConfig& cfg, std::size_t n,
                                        long long path_id);

// Byte-deterministic emitters; records are sorted by path_id and duplicate ids
// are rejected.
std::string emit_r2r_json(std::vector<DatasetRecord> records);
std::string emit_supervision_json(std::vector<WordObjectSupervision> sup);

std::vector<DatasetRecord> read_r2r_json(std::string_view text);
std::vector<WordObjectSupervision> read_supervision_json(std::string_view text);

// Sampled path files share the R2R layout without instructions.
std::string emit_paths_json(const std::vector<std::pair<long long, PathSpec>>& paths);
std::vector<std::pair<long long, PathSpec>> read_paths_json(std::string_view text);

}  // namespace vlnaug
