#include "vlnaug/supervision.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <json.hpp>

#include "json_format.hpp"
#include "vlnaug/error.hpp"
#include "vlnaug/text.hpp"

namespace vlnaug {

std::vector<std::size_t> align_words_to_nodes(std::size_t token_count, std::size_t node_count) {
  if (token_count == 0 || node_count == 0) {
    throw Error("align_words_to_nodes: token and node counts must be positive");
  }
  std::vector<std::size_t> out(token_count, 0);
  if (token_count == 1) return out;
  // round_half_up(i·(K−1)/(L−1)) in exact integer arithmetic.
  const std::size_t span = token_count - 1;
  const std::size_t nodes = node_count - 1;
  for (std::size_t i = 0; i < token_count; ++i) {
    out[i] = (2 * i * nodes + span) / (2 * span);
  }
  return out;
}

std::vector<std::string> top_n_objects(const SceneModel& scene, const NavGraph& graph,
                                       std::string_view node, const SaliencyConfig& cfg,
                                       std::size_t n) {
  if (n == 0) throw Error("top_n_objects: N must be at least 1");
  auto candidates = filter_candidates(
      observe(scene, graph.viewpoint(node).position, cfg.max_distance), cfg);
  std::sort(candidates.begin(), candidates.end(),
            [](const ObservedObject& a, const ObservedObject& b) {
              return std::make_tuple(-a.area, a.distance, a.object_index) <
                     std::make_tuple(-b.area, b.distance, b.object_index);
            });
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& c : candidates) {
    if (out.size() == n) break;
    std::string noun = head_noun(c.category);
    if (seen.insert(noun).second) out.push_back(std::move(noun));
  }
  return out;
}

WordObjectSupervision build_supervision(const SceneModel& scene, const NavGraph& graph,
                                        const PathSpec& path, std::string_view instruction,
                                        const SaliencyConfig& cfg, std::size_t n,
                                        long long path_id) {
  if (path.path.empty()) throw Error("build_supervision: empty path");
  WordObjectSupervision sup;
  sup.path_id = path_id;
  sup.tokens = tokenize(instruction);
  if (sup.tokens.empty()) throw Error("build_supervision: instruction has no tokens");
  sup.node_of_token = align_words_to_nodes(sup.tokens.size(), path.path.size());

  std::vector<std::vector<std::string>> per_node(path.path.size());
  std::vector<bool> done(path.path.size(), false);
  for (std::size_t node : sup.node_of_token) {
    if (!done[node]) {
      per_node[node] = top_n_objects(scene, graph, path.path[node], cfg, n);
      done[node] = true;
    }
    sup.objects_of_token.push_back(per_node[node]);
  }
  return sup;
}

namespace {

template <typename T>
void sort_unique_ids(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const T& a, const T& b) { return a.path_id < b.path_id; });
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].path_id == items[i - 1].path_id) {
      throw Error("duplicate path_id " + std::to_string(items[i].path_id));
    }
  }
}

using nlohmann::json;

json parse_array(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SchemaError("", "expected an array");
  return doc;
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "/" + key, "missing key");
  return *it;
}

long long id_field(const json& obj, const std::string& path) {
  const json& v = field(obj, path, "path_id");
  if (!v.is_number_integer()) throw SchemaError(path + "/path_id", "expected an integer");
  return v.get<long long>();
}

double number_field(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number()) throw SchemaError(path + "/" + key, "expected a number");
  return v.get<double>();
}

std::string string_field(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_string()) throw SchemaError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> strings(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw SchemaError(path + "/" + std::to_string(i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

}  // namespace

std::string emit_r2r_json(std::vector<DatasetRecord> records) {
  using namespace json_format;
  sort_unique_ids(records);
  std::vector<std::string> rows;
  for (const auto& r : records) {
    if (r.instructions.empty()) {
      throw Error("record " + std::to_string(r.path_id) + " has no instructions");
    }
    rows.push_back("{\"path_id\": " + std::to_string(r.path_id) +
                   ", \"scan\": " + quote(r.scan) +
                   ", \"heading\": " + fixed6(r.heading) +
                   ", \"path\": " + string_list(r.path) +
                   ", \"instructions\": " + string_list(r.instructions) +
                   ", \"distance\": " + fixed6(r.distance) + "}");
  }
  return array_of_rows(rows);
}

std::string emit_supervision_json(std::vector<WordObjectSupervision> sup) {
  using namespace json_format;
  sort_unique_ids(sup);
  std::vector<std::string> rows;
  for (const auto& s : sup) {
    if (s.tokens.size() != s.node_of_token.size() || s.tokens.size() != s.objects_of_token.size()) {
      throw Error("supervision " + std::to_string(s.path_id) + " has mismatched lengths");
    }
    std::string objects = "[";
    for (std::size_t i = 0; i < s.objects_of_token.size(); ++i) {
      if (i) objects += ", ";
      objects += string_list(s.objects_of_token[i]);
    }
    objects += "]";
    rows.push_back("{\"path_id\": " + std::to_string(s.path_id) +
                   ", \"tokens\": " + string_list(s.tokens) +
                   ", \"node_of_token\": " + int_list(s.node_of_token) +
                   ", \"objects_of_token\": " + objects + "}");
  }
  return array_of_rows(rows);
}

std::vector<DatasetRecord> read_r2r_json(std::string_view text) {
  const json doc = parse_array(text);
  std::vector<DatasetRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string p = "/" + std::to_string(i);
    DatasetRecord r;
    r.path_id = id_field(doc[i], p);
    r.scan = string_field(doc[i], p, "scan");
    r.heading = number_field(doc[i], p, "heading");
    r.path = strings(field(doc[i], p, "path"), p + "/path");
    r.instructions = strings(field(doc[i], p, "instructions"), p + "/instructions");
    if (r.instructions.empty()) throw SchemaError(p + "/instructions", "empty");
    r.distance = number_field(doc[i], p, "distance");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<WordObjectSupervision> read_supervision_json(std::string_view text) {
  const json doc = parse_array(text);
  std::vector<WordObjectSupervision> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string p = "/" + std::to_string(i);
    WordObjectSupervision s;
    s.path_id = id_field(doc[i], p);
    s.tokens = strings(field(doc[i], p, "tokens"), p + "/tokens");
    const json& nodes = field(doc[i], p, "node_of_token");
    if (!nodes.is_array()) throw SchemaError(p + "/node_of_token", "expected an array");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (!nodes[k].is_number_unsigned()) {
        throw SchemaError(p + "/node_of_token/" + std::to_string(k), "expected a node index");
      }
      s.node_of_token.push_back(nodes[k].get<std::size_t>());
    }
    const json& objs = field(doc[i], p, "objects_of_token");
    if (!objs.is_array()) throw SchemaError(p + "/objects_of_token", "expected an array");
    for (std::size_t k = 0; k < objs.size(); ++k) {
      s.objects_of_token.push_back(strings(objs[k], p + "/objects_of_token/" + std::to_string(k)));
    }
    if (s.node_of_token.size() != s.tokens.size() || s.objects_of_token.size() != s.tokens.size()) {
      throw SchemaError(p, "per-token lists differ in length");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string emit_paths_json(const std::vector<std::pair<long long, PathSpec>>& paths) {
  using namespace json_format;
  auto sorted = paths;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i && sorted[i].first == sorted[i - 1].first) {
      throw Error("duplicate path_id " + std::to_string(sorted[i].first));
    }
    const PathSpec& s = sorted[i].second;
    rows.push_back("{\"path_id\": " + std::to_string(sorted[i].first) +
                   ", \"scan\": " + quote(s.scan) +
                   ", \"heading\": " + fixed6(s.heading_0) +
                   ", \"path\": " + string_list(s.path) +
                   ", \"distance\": " + fixed6(s.geodesic_length) + "}");
  }
  return array_of_rows(rows);
}

std::vector<std::pair<long long, PathSpec>> read_paths_json(std::string_view text) {
  const json doc = parse_array(text);
  std::vector<std::pair<long long, PathSpec>> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string p = "/" + std::to_string(i);
    PathSpec s;
    const long long id = id_field(doc[i], p);
    s.scan = string_field(doc[i], p, "scan");
    s.heading_0 = number_field(doc[i], p, "heading");
    s.path = strings(field(doc[i], p, "path"), p + "/path");
    if (s.path.empty()) throw SchemaError(p + "/path", "empty path");
    s.geodesic_length = number_field(doc[i], p, "distance");
    out.emplace_back(id, std::move(s));
  }
  return out;
}

}  // namespace vlnaug
