#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vlnaug/vec3.hpp"

namespace vlnaug {

struct Viewpoint {
  std::string id;
  Vec3 position;
  double height = 0.0;
  bool included = true;
};

struct Neighbor {
  std::string id;
  double length = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct PathSpec {
  std::string scan;
  std::vector<std::string> path;
  double heading_0 = 0.0;
  double geodesic_length = 0.0;

  std::size_t hops() const { return path.empty() ? 0 : path.size() - 1; }

  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

// Undirected navigation graph over viewpoints. Edges join included
// viewpoints only and carry their Euclidean length; adjacency lists are kept
// sorted by neighbor id.
class NavGraph {
 public:
  NavGraph() = default;
  NavGraph(std::string scan_id, std::vector<Viewpoint> viewpoints,
           const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  const std::string& scan_id() const { return scan_id_; }
  const std::vector<Viewpoint>& viewpoints() const { return viewpoints_; }
  std::size_t size() const { return viewpoints_.size(); }

  bool contains(std::string_view id) const;
  // Throws vlnaug::Error for an unknown id.
  std::size_t index_of(std::string_view id) const;
  const Viewpoint& viewpoint(std::string_view id) const;

  // Sorted by id ascending. Throws for an unknown id.
  const std::vector<Neighbor>& neighbors(std::string_view id) const;
  const std::vector<std::size_t>& neighbor_indices(std::size_t node) const {
    return adjacency_[node];
  }

  // Length of the edge (a, b), or nullopt when they are not adjacent.
  std::optional<double> edge_length(std::string_view a, std::string_view b) const;
  std::size_t edge_count() const;

  // Sum of edge lengths along `path`; throws when a consecutive pair is not
  // an edge.
  double path_length(const std::vector<std::string>& path) const;

 private:
  std::string scan_id_;
  std::vector<Viewpoint> viewpoints_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<Neighbor>> neighbors_;
};

// Parses a connectivity JSON array. Position comes from pose elements 3, 7
// and 11; an edge exists when both ends are included and either direction is
// marked unobstructed.
NavGraph parse_connectivity(std::string_view text, std::string scan_id);

// Shortest path by summed edge length. Among equal-cost paths the one whose
// first differing viewpoint id sorts lower wins. nullopt when unreachable.
std::optional<PathSpec> shortest_path(const NavGraph& graph, std::string_view from,
                                      std::string_view to);

std::optional<double> geodesic_distance(const NavGraph& graph, std::string_view from,
                                        std::string_view to);

struct SamplerParams {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t min_hops = 4;
  std::size_t max_hops = 7;
  double min_geodesic = 5.0;
};

struct SampleResult {
  std::vector<PathSpec> paths;
  // Number of requested paths the graph could not supply.
  std::size_t shortfall = 0;
};

// Draws up to params.n shortest paths between distinct endpoint pairs without
// replacement. Fully determined by (graph, params).
SampleResult sample_paths(const NavGraph& graph, const SamplerParams& params);

}  // namespace vlnaug
