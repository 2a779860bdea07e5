#include "vlnaug/nav_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <json.hpp>

#include "vlnaug/error.hpp"
#include "vlnaug/splitmix64.hpp"
#include "vlnaug/view_geometry.hpp"

namespace vlnaug {

NavGraph::NavGraph(std::string scan_id, std::vector<Viewpoint> viewpoints,
                   const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : scan_id_(std::move(scan_id)), viewpoints_(std::move(viewpoints)) {
  for (std::size_t i = 0; i < viewpoints_.size(); ++i) {
    if (!index_.emplace(viewpoints_[i].id, i).second) {
      throw Error("duplicate viewpoint id '" + viewpoints_[i].id + "'");
    }
  }
  adjacency_.assign(viewpoints_.size(), {});
  for (auto [a, b] : edges) {
    if (a >= viewpoints_.size() || b >= viewpoints_.size() || a == b) {
      throw Error("edge references an invalid viewpoint");
    }
    if (!viewpoints_[a].included || !viewpoints_[b].included) {
      throw Error("edge touches an excluded viewpoint");
    }
    if (distance(viewpoints_[a].position, viewpoints_[b].position) <= 0.0) {
      throw Error("zero-length edge between '" + viewpoints_[a].id + "' and '" +
                  viewpoints_[b].id + "'");
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  neighbors_.resize(viewpoints_.size());
  for (std::size_t i = 0; i < viewpoints_.size(); ++i) {
    auto& adj = adjacency_[i];
    std::sort(adj.begin(), adj.end(), [&](std::size_t l, std::size_t r) {
      return viewpoints_[l].id < viewpoints_[r].id;
    });
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (std::size_t j : adj) {
      neighbors_[i].push_back(
          {viewpoints_[j].id, distance(viewpoints_[i].position, viewpoints_[j].position)});
    }
  }
}

bool NavGraph::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t NavGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw Error("unknown viewpoint '" + std::string(id) + "'");
  return it->second;
}

const Viewpoint& NavGraph::viewpoint(std::string_view id) const {
  return viewpoints_[index_of(id)];
}

const std::vector<Neighbor>& NavGraph::neighbors(std::string_view id) const {
  return neighbors_[index_of(id)];
}

std::optional<double> NavGraph::edge_length(std::string_view a, std::string_view b) const {
  for (const Neighbor& n : neighbors(a)) {
    if (n.id == b) return n.length;
  }
  return std::nullopt;
}

std::size_t NavGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency_) twice += adj.size();
  return twice / 2;
}

double NavGraph::path_length(const std::vector<std::string>& path) const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto len = edge_length(path[i], path[i + 1]);
    if (!len) throw Error("'" + path[i] + "' -> '" + path[i + 1] + "' is not an edge");
    total += *len;
  }
  return total;
}

NavGraph parse_connectivity(std::string_view text, std::string scan_id) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SchemaError("", "expected an array of node records");
  const std::size_t n = doc.size();

  std::vector<Viewpoint> viewpoints;
  std::vector<std::vector<bool>> unobstructed;
  for (std::size_t i = 0; i < n; ++i) {
    const json& node = doc[i];
    const std::string path = "/" + std::to_string(i);
    if (!node.is_object()) throw SchemaError(path, "expected an object");
    auto field = [&](const char* key) -> const json& {
      auto it = node.find(key);
      if (it == node.end()) throw SchemaError(path + "/" + key, "missing key");
      return *it;
    };
    Viewpoint vp;
    const json& id = field("image_id");
    if (!id.is_string()) throw SchemaError(path + "/image_id", "expected a string");
    vp.id = id.get<std::string>();

    const json& pose = field("pose");
    if (!pose.is_array() || pose.size() != 16) {
      throw SchemaError(path + "/pose", "pose must hold 16 numbers");
    }
    for (std::size_t k = 0; k < 16; ++k) {
      if (!pose[k].is_number()) throw SchemaError(path + "/pose/" + std::to_string(k), "expected a number");
    }
    vp.position = {pose[3].get<double>(), pose[7].get<double>(), pose[11].get<double>()};

    const json& included = field("included");
    if (!included.is_boolean()) throw SchemaError(path + "/included", "expected a boolean");
    vp.included = included.get<bool>();

    const json& height = field("height");
    if (!height.is_number()) throw SchemaError(path + "/height", "expected a number");
    vp.height = height.get<double>();

    const json& unob = field("unobstructed");
    if (!unob.is_array() || unob.size() != n) {
      throw SchemaError(path + "/unobstructed",
                        "expected " + std::to_string(n) + " booleans");
    }
    std::vector<bool> row(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!unob[k].is_boolean()) {
        throw SchemaError(path + "/unobstructed/" + std::to_string(k), "expected a boolean");
      }
      row[k] = unob[k].get<bool>();
    }
    unobstructed.push_back(std::move(row));
    viewpoints.push_back(std::move(vp));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (viewpoints[i].id == viewpoints[j].id) {
        throw SchemaError("/" + std::to_string(i) + "/image_id",
                          "duplicate image_id '" + viewpoints[i].id + "'");
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!viewpoints[i].included || !viewpoints[j].included) continue;
      if (unobstructed[i][j] || unobstructed[j][i]) edges.emplace_back(i, j);
    }
  }
  return NavGraph(std::move(scan_id), std::move(viewpoints), edges);
}

namespace {

// Single-target Dijkstra: distance from every node to `target`.
std::vector<double> distances_to(const NavGraph& graph, std::size_t target) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(graph.size(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[target] = 0.0;
  queue.emplace(0.0, target);
  const auto& vps = graph.viewpoints();
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (std::size_t v : graph.neighbor_indices(u)) {
      const double nd = d + distance(vps[u].position, vps[v].position);
      if (nd < dist[v]) {
        dist[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
  return dist;
}

// Walks forward from `from`, taking the smallest-id neighbor that stays on a
// shortest path. Adjacency is id-sorted, so the first match wins.
std::vector<std::size_t> trace_path(const NavGraph& graph, const std::vector<double>& dist,
                                    std::size_t from, std::size_t to) {
  const auto& vps = graph.viewpoints();
  const double tol = 1e-9 * std::max(1.0, dist[from]);
  std::vector<std::size_t> nodes{from};
  std::size_t u = from;
  while (u != to) {
    std::size_t next = u;
    for (std::size_t v : graph.neighbor_indices(u)) {
      const double len = distance(vps[u].position, vps[v].position);
      if (std::abs(len + dist[v] - dist[u]) <= tol && dist[v] < dist[u]) {
        next = v;
        break;
      }
    }
    if (next == u) throw Error("shortest path reconstruction failed");
    nodes.push_back(next);
    u = next;
  }
  return nodes;
}

PathSpec make_path(const NavGraph& graph, const std::vector<std::size_t>& nodes) {
  PathSpec spec;
  spec.scan = graph.scan_id();
  const auto& vps = graph.viewpoints();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    spec.path.push_back(vps[nodes[i]].id);
    if (i > 0) spec.geodesic_length += distance(vps[nodes[i - 1]].position, vps[nodes[i]].position);
  }
  if (nodes.size() >= 2) {
    spec.heading_0 =
        geometry::heading_to(vps[nodes[0]].position, vps[nodes[1]].position).value;
  }
  return spec;
}

}  // namespace

std::optional<PathSpec> shortest_path(const NavGraph& graph, std::string_view from,
                                      std::string_view to) {
  const std::size_t a = graph.index_of(from);
  const std::size_t b = graph.index_of(to);
  if (!graph.viewpoints()[a].included || !graph.viewpoints()[b].included) {
    throw Error("shortest_path endpoints must be included viewpoints");
  }
  if (a == b) return make_path(graph, {a});
  const auto dist = distances_to(graph, b);
  if (!std::isfinite(dist[a])) return std::nullopt;
  return make_path(graph, trace_path(graph, dist, a, b));
}

std::optional<double> geodesic_distance(const NavGraph& graph, std::string_view from,
                                        std::string_view to) {
  const std::size_t a = graph.index_of(from);
  const std::size_t b = graph.index_of(to);
  if (a == b) return 0.0;
  const auto dist = distances_to(graph, b);
  if (!std::isfinite(dist[a])) return std::nullopt;
  return dist[a];
}

SampleResult sample_paths(const NavGraph& graph, const SamplerParams& params) {
  if (params.min_hops > params.max_hops) throw Error("min_hops exceeds max_hops");
  SampleResult result;
  if (params.n == 0) return result;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.viewpoints()[i].included) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return graph.viewpoints()[l].id < graph.viewpoints()[r].id;
  });

  // Every admissible ordered endpoint pair, in (start id, goal id) order.
  std::vector<std::vector<double>> dist_to(graph.size());
  for (std::size_t b : order) dist_to[b] = distances_to(graph, b);
  std::vector<std::vector<std::size_t>> pool;
  for (std::size_t a : order) {
    for (std::size_t b : order) {
      if (a == b || !std::isfinite(dist_to[b][a])) continue;
      auto nodes = trace_path(graph, dist_to[b], a, b);
      const std::size_t hops = nodes.size() - 1;
      if (hops < params.min_hops || hops > params.max_hops) continue;
      if (make_path(graph, nodes).geodesic_length < params.min_geodesic) continue;
      pool.push_back(std::move(nodes));
    }
  }

  // Partial Fisher–Yates: pair draw, then heading draw, per accepted path.
  SplitMix64 rng(params.seed);
  const std::size_t take = std::min(params.n, pool.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
    PathSpec spec = make_path(graph, pool[i]);
    spec.heading_0 = static_cast<double>(rng.below(12)) * std::numbers::pi / 6.0;
    result.paths.push_back(std::move(spec));
  }
  result.shortfall = params.n - take;
  return result;
}

}  // namespace vlnaug
