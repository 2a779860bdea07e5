#include "vlnaug/scene.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "json_format.hpp"
#include "vlnaug/error.hpp"

namespace vlnaug {
namespace {

constexpr double kAxisTolerance = 1e-3;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Cursor over one record's tokens that reports failures against its line.
class RecordReader {
 public:
  RecordReader(std::size_t line, std::string record,
               std::vector<std::string_view> tokens)
      : line_(line), record_(std::move(record)), tokens_(std::move(tokens)) {}

  void expect_count(std::size_t n) const {
    if (tokens_.size() != n) {
      fail("expected " + std::to_string(n) + " tokens, found " +
           std::to_string(tokens_.size()));
    }
  }

  std::string_view text(std::size_t i) const { return tokens_[i]; }

  int integer(std::size_t i) const {
    const std::string_view tok = tokens_[i];
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("token " + std::to_string(i) + " '" + std::string(tok) +
           "' is not an integer");
    }
    return value;
  }

  double number(std::size_t i) const {
    const std::string_view tok = tokens_[i];
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() ||
        !std::isfinite(value)) {
      fail("token " + std::to_string(i) + " '" + std::string(tok) +
           "' is not a finite number");
    }
    return value;
  }

  Vec3 vec3(std::size_t i) const { return {number(i), number(i + 1), number(i + 2)}; }

  // Placeholder columns must still be numeric.
  void padding(std::size_t first, std::size_t count) const {
    for (std::size_t i = first; i < first + count; ++i) number(i);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, record_, msg);
  }

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
  std::string record_;
  std::vector<std::string_view> tokens_;
};

std::string normalize_category_name(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : raw) {
    if (c == '_' || c == ' ') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void check_obb(const SceneObject& o, const RecordReader& rec) {
  if (std::abs(o.axis0.norm() - 1.0) > kAxisTolerance) rec.fail("axis0 is not unit length");
  if (std::abs(o.axis1.norm() - 1.0) > kAxisTolerance) rec.fail("axis1 is not unit length");
  if (std::abs(o.axis0.dot(o.axis1)) > kAxisTolerance) rec.fail("axis0 and axis1 are not orthogonal");
  if (o.radii.x < 0.0 || o.radii.y < 0.0 || o.radii.z < 0.0) rec.fail("negative radius");
}

bool bbox_ordered(const Vec3& lo, const Vec3& hi) {
  return lo.x <= hi.x && lo.y <= hi.y && lo.z <= hi.z;
}

struct Declared {
  int panoramas = 0;
  int objects = 0;
  int categories = 0;
  int regions = 0;
  int levels = 0;
};

template <typename T>
struct Located {
  T value;
  std::size_t line;
};

// Places each record at its declared index, rejecting duplicates and indices
// outside the header's declared count.
template <typename T>
std::vector<T> place_by_index(std::vector<Located<T>>& records, int declared,
                              const char* record, std::size_t header_line,
                              const char* plural) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(std::max(declared, 0)));
  for (auto& r : records) {
    const int idx = r.value.index;
    if (idx < 0 || idx >= declared) {
      throw ParseError(r.line, record,
                       "index " + std::to_string(idx) + " outside declared count " +
                           std::to_string(declared));
    }
    if (slots[idx]) {
      throw ParseError(r.line, record, "duplicate index " + std::to_string(idx));
    }
    slots[idx] = std::move(r.value);
  }
  if (records.size() != static_cast<std::size_t>(declared)) {
    throw ParseError(header_line, "H",
                     "header declares " + std::to_string(declared) + " " + plural +
                         " but " + std::to_string(records.size()) + " were found");
  }
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

const Panorama* SceneModel::find_panorama(std::string_view name) const {
  for (const Panorama& p : panoramas) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

SceneModel parse_house(std::string_view text) {
  SceneModel scene;
  std::optional<Declared> declared;
  std::size_t header_line = 0;

  struct LevelRecord {
    int index;
  };
  std::vector<Located<LevelRecord>> levels;
  std::vector<Located<Region>> regions;
  std::vector<Located<Category>> categories;
  std::vector<Located<Panorama>> panoramas;
  std::vector<Located<SceneObject>> objects;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view kind = tokens[0];
    if (kind.size() != 1 || std::string_view("HLRCPO").find(kind[0]) == std::string_view::npos) {
      throw ParseError(line_no, std::string(kind), "unknown record type");
    }
    RecordReader rec(line_no, std::string(kind), tokens);

    if (!declared) {
      if (kind != "H") rec.fail("first record must be the H header");
    } else if (kind == "H") {
      rec.fail("duplicate header");
    }

    switch (kind[0]) {
      case 'H': {
        rec.expect_count(18);
        rec.padding(3, 1);
        rec.padding(5, 3);
        rec.padding(11, 1);
        rec.padding(13, 5);
        Declared d;
        d.panoramas = rec.integer(4);
        d.objects = rec.integer(8);
        d.categories = rec.integer(9);
        d.regions = rec.integer(10);
        d.levels = rec.integer(12);
        if (d.panoramas < 0 || d.objects < 0 || d.categories < 0 || d.regions < 0 ||
            d.levels < 0) {
          rec.fail("negative record count");
        }
        scene.scan_id = std::string(rec.text(1));
        declared = d;
        header_line = line_no;
        break;
      }
      case 'L': {
        rec.expect_count(18);
        rec.integer(2);
        rec.vec3(4);
        const Vec3 lo = rec.vec3(7);
        const Vec3 hi = rec.vec3(10);
        rec.padding(13, 5);
        if (!bbox_ordered(lo, hi)) rec.fail("bbox_lo exceeds bbox_hi");
        levels.push_back({{rec.integer(1)}, line_no});
        break;
      }
      case 'R': {
        rec.expect_count(20);
        rec.padding(3, 2);
        rec.padding(15, 5);
        Region r;
        r.index = rec.integer(1);
        r.level_index = rec.integer(2);
        if (rec.text(5).size() != 1) rec.fail("region label must be a single character");
        r.label = rec.text(5)[0];
        r.position = rec.vec3(6);
        r.bbox_lo = rec.vec3(9);
        r.bbox_hi = rec.vec3(12);
        if (!bbox_ordered(r.bbox_lo, r.bbox_hi)) rec.fail("bbox_lo exceeds bbox_hi");
        regions.push_back({r, line_no});
        break;
      }
      case 'C': {
        rec.expect_count(11);
        rec.padding(6, 5);
        Category c;
        c.index = rec.integer(1);
        c.mapping_index = rec.integer(2);
        c.name = normalize_category_name(rec.text(3));
        if (c.name.empty()) rec.fail("empty category name");
        c.mpcat40_index = rec.integer(4);
        c.mpcat40_name = std::string(rec.text(5));
        categories.push_back({c, line_no});
        break;
      }
      case 'P': {
        rec.expect_count(13);
        rec.padding(4, 1);
        rec.padding(8, 5);
        Panorama p;
        p.name = std::string(rec.text(1));
        p.index = rec.integer(2);
        p.region_index = rec.integer(3);
        p.position = rec.vec3(5);
        panoramas.push_back({p, line_no});
        break;
      }
      case 'O': {
        rec.expect_count(24);
        rec.padding(16, 8);
        SceneObject o;
        o.index = rec.integer(1);
        o.region_index = rec.integer(2);
        o.category_index = rec.integer(3);
        o.center = rec.vec3(4);
        o.axis0 = rec.vec3(7);
        o.axis1 = rec.vec3(10);
        o.radii = rec.vec3(13);
        check_obb(o, rec);
        objects.push_back({o, line_no});
        break;
      }
    }
  }

  if (!declared) throw ParseError(line_no == 0 ? 1 : line_no, "H", "missing header");
  const Declared& d = *declared;

  // Cross-index checks name the offending record's line.
  for (const auto& r : regions) {
    if (r.value.level_index < 0 || r.value.level_index >= d.levels) {
      throw ParseError(r.line, "R", "level index " + std::to_string(r.value.level_index) +
                                        " does not resolve");
    }
  }
  for (const auto& o : objects) {
    if (o.value.region_index < -1 || o.value.region_index >= d.regions) {
      throw ParseError(o.line, "O", "region index " + std::to_string(o.value.region_index) +
                                        " does not resolve");
    }
    if (o.value.category_index < 0 || o.value.category_index >= d.categories) {
      throw ParseError(o.line, "O",
                       "category index " + std::to_string(o.value.category_index) +
                           " does not resolve");
    }
  }
  std::set<std::string> names;
  for (const auto& p : panoramas) {
    if (p.value.region_index < -1 || p.value.region_index >= d.regions) {
      throw ParseError(p.line, "P", "region index " + std::to_string(p.value.region_index) +
                                        " does not resolve");
    }
    if (!names.insert(p.value.name).second) {
      throw ParseError(p.line, "P", "duplicate panorama name '" + p.value.name + "'");
    }
  }

  // Levels only take part in validation; the model does not keep them.
  place_by_index(levels, d.levels, "L", header_line, "levels");

  scene.regions = place_by_index(regions, d.regions, "R", header_line, "regions");
  scene.categories = place_by_index(categories, d.categories, "C", header_line, "categories");
  scene.panoramas = place_by_index(panoramas, d.panoramas, "P", header_line, "panoramas");
  scene.objects = place_by_index(objects, d.objects, "O", header_line, "objects");
  return scene;
}

const std::string& category_name(const SceneModel& scene, int object_index) {
  if (object_index < 0 || static_cast<std::size_t>(object_index) >= scene.objects.size()) {
    throw Error("object index " + std::to_string(object_index) + " out of range");
  }
  const int cat = scene.objects[object_index].category_index;
  if (cat < 0 || static_cast<std::size_t>(cat) >= scene.categories.size()) {
    throw Error("object " + std::to_string(object_index) + " has dangling category");
  }
  return scene.categories[cat].name;
}

std::string head_noun(std::string_view name) {
  std::size_t end = name.find_last_not_of(" \t\n\r");
  if (end == std::string_view::npos) throw Error("head_noun: empty category name");
  std::size_t begin = name.find_last_of(" \t\n\r", end);
  begin = begin == std::string_view::npos ? 0 : begin + 1;
  return std::string(name.substr(begin, end - begin + 1));
}

void validate_scene(const SceneModel& scene) {
  auto at = [](const char* list, std::size_t i, const char* field = nullptr) {
    std::string p = std::string("/") + list + "/" + std::to_string(i);
    if (field) p += std::string("/") + field;
    return p;
  };
  for (std::size_t i = 0; i < scene.categories.size(); ++i) {
    const Category& c = scene.categories[i];
    if (c.index != static_cast<int>(i)) throw SchemaError(at("categories", i, "index"), "indices must be contiguous from 0");
    if (c.name.empty()) throw SchemaError(at("categories", i, "name"), "empty name");
  }
  for (std::size_t i = 0; i < scene.regions.size(); ++i) {
    const Region& r = scene.regions[i];
    if (r.index != static_cast<int>(i)) throw SchemaError(at("regions", i, "index"), "indices must be contiguous from 0");
    if (r.level_index < 0) throw SchemaError(at("regions", i, "level_index"), "negative level index");
    if (!bbox_ordered(r.bbox_lo, r.bbox_hi)) throw SchemaError(at("regions", i, "bbox_lo"), "bbox_lo exceeds bbox_hi");
  }
  const int n_regions = static_cast<int>(scene.regions.size());
  const int n_categories = static_cast<int>(scene.categories.size());
  for (std::size_t i = 0; i < scene.objects.size(); ++i) {
    const SceneObject& o = scene.objects[i];
    if (o.index != static_cast<int>(i)) throw SchemaError(at("objects", i, "index"), "indices must be contiguous from 0");
    if (o.region_index < -1 || o.region_index >= n_regions) throw SchemaError(at("objects", i, "region_index"), "dangling region index");
    if (o.category_index < 0 || o.category_index >= n_categories) throw SchemaError(at("objects", i, "category_index"), "dangling category index");
    if (std::abs(o.axis0.norm() - 1.0) > kAxisTolerance) throw SchemaError(at("objects", i, "axis0"), "not unit length");
    if (std::abs(o.axis1.norm() - 1.0) > kAxisTolerance) throw SchemaError(at("objects", i, "axis1"), "not unit length");
    if (std::abs(o.axis0.dot(o.axis1)) > kAxisTolerance) throw SchemaError(at("objects", i, "axis1"), "not orthogonal to axis0");
    if (o.radii.x < 0.0 || o.radii.y < 0.0 || o.radii.z < 0.0) throw SchemaError(at("objects", i, "radii"), "negative radius");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < scene.panoramas.size(); ++i) {
    const Panorama& p = scene.panoramas[i];
    if (p.index != static_cast<int>(i)) throw SchemaError(at("panoramas", i, "index"), "indices must be contiguous from 0");
    if (p.region_index < -1 || p.region_index >= n_regions) throw SchemaError(at("panoramas", i, "region_index"), "dangling region index");
    if (!names.insert(p.name).second) throw SchemaError(at("panoramas", i, "name"), "duplicate name");
  }
}

std::string write_scene_json(const SceneModel& scene) {
  using namespace json_format;
  std::vector<std::string> cats, regs, objs, panos;
  for (const Category& c : scene.categories) {
    cats.push_back("{\"index\": " + std::to_string(c.index) +
                   ", \"mapping_index\": " + std::to_string(c.mapping_index) +
                   ", \"name\": " + quote(c.name) +
                   ", \"mpcat40_index\": " + std::to_string(c.mpcat40_index) +
                   ", \"mpcat40_name\": " + quote(c.mpcat40_name) + "}");
  }
  for (const Region& r : scene.regions) {
    regs.push_back("{\"index\": " + std::to_string(r.index) +
                   ", \"level_index\": " + std::to_string(r.level_index) +
                   ", \"label\": " + quote(std::string(1, r.label)) +
                   ", \"position\": " + vec3(r.position) +
                   ", \"bbox_lo\": " + vec3(r.bbox_lo) +
                   ", \"bbox_hi\": " + vec3(r.bbox_hi) + "}");
  }
  for (const SceneObject& o : scene.objects) {
    objs.push_back("{\"index\": " + std::to_string(o.index) +
                   ", \"region_index\": " + std::to_string(o.region_index) +
                   ", \"category_index\": " + std::to_string(o.category_index) +
                   ", \"center\": " + vec3(o.center) +
                   ", \"axis0\": " + vec3(o.axis0) +
                   ", \"axis1\": " + vec3(o.axis1) +
                   ", \"radii\": " + vec3(o.radii) + "}");
  }
  for (const Panorama& p : scene.panoramas) {
    panos.push_back("{\"name\": " + quote(p.name) +
                    ", \"index\": " + std::to_string(p.index) +
                    ", \"region_index\": " + std::to_string(p.region_index) +
                    ", \"position\": " + vec3(p.position) + "}");
  }
  std::string out = "{\n";
  out += "  \"scan_id\": " + quote(scene.scan_id) + ",\n";
  out += "  \"categories\": " + array_of_rows(cats, "  ") + ",\n";
  out += "  \"regions\": " + array_of_rows(regs, "  ") + ",\n";
  out += "  \"objects\": " + array_of_rows(objs, "  ") + ",\n";
  out += "  \"panoramas\": " + array_of_rows(panos, "  ") + "\n";
  out += "}\n";
  return out;
}

namespace {

using nlohmann::json;

class JsonReader {
 public:
  static const json& key(const json& obj, const std::string& path, const char* name) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(name);
    if (it == obj.end()) throw SchemaError(path + "/" + name, "missing key");
    return *it;
  }

  static void only_keys(const json& obj, const std::string& path,
                        std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || it.key() == a;
      if (!ok) throw SchemaError(path + "/" + it.key(), "unknown key");
    }
  }

  static int integer(const json& obj, const std::string& path, const char* name) {
    const json& v = key(obj, path, name);
    if (!v.is_number_integer()) throw SchemaError(path + "/" + name, "expected an integer");
    return v.get<int>();
  }

  static double number(const json& v, const std::string& path) {
    if (!v.is_number()) throw SchemaError(path, "expected a number");
    return v.get<double>();
  }

  static std::string string(const json& obj, const std::string& path, const char* name) {
    const json& v = key(obj, path, name);
    if (!v.is_string()) throw SchemaError(path + "/" + name, "expected a string");
    return v.get<std::string>();
  }

  static Vec3 vec3(const json& obj, const std::string& path, const char* name) {
    const json& v = key(obj, path, name);
    const std::string p = path + "/" + name;
    if (!v.is_array() || v.size() != 3) throw SchemaError(p, "expected an array of 3 numbers");
    return {number(v[0], p + "/0"), number(v[1], p + "/1"), number(v[2], p + "/2")};
  }

  static const json& array(const json& obj, const char* name) {
    const json& v = key(obj, "", name);
    if (!v.is_array()) throw SchemaError(std::string("/") + name, "expected an array");
    return v;
  }
};

}  // namespace

SceneModel read_scene_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  using R = JsonReader;
  if (!doc.is_object()) throw SchemaError("", "expected a top-level object");
  R::only_keys(doc, "", {"scan_id", "categories", "regions", "objects", "panoramas"});

  SceneModel scene;
  scene.scan_id = R::string(doc, "", "scan_id");

  const json& cats = R::array(doc, "categories");
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const std::string p = "/categories/" + std::to_string(i);
    R::only_keys(cats[i], p, {"index", "mapping_index", "name", "mpcat40_index", "mpcat40_name"});
    Category c;
    c.index = R::integer(cats[i], p, "index");
    c.mapping_index = R::integer(cats[i], p, "mapping_index");
    c.name = R::string(cats[i], p, "name");
    c.mpcat40_index = R::integer(cats[i], p, "mpcat40_index");
    c.mpcat40_name = R::string(cats[i], p, "mpcat40_name");
    scene.categories.push_back(std::move(c));
  }

  const json& regs = R::array(doc, "regions");
  for (std::size_t i = 0; i < regs.size(); ++i) {
    const std::string p = "/regions/" + std::to_string(i);
    R::only_keys(regs[i], p, {"index", "level_index", "label", "position", "bbox_lo", "bbox_hi"});
    Region r;
    r.index = R::integer(regs[i], p, "index");
    r.level_index = R::integer(regs[i], p, "level_index");
    const std::string label = R::string(regs[i], p, "label");
    if (label.size() != 1) throw SchemaError(p + "/label", "expected a single character");
    r.label = label[0];
    r.position = R::vec3(regs[i], p, "position");
    r.bbox_lo = R::vec3(regs[i], p, "bbox_lo");
    r.bbox_hi = R::vec3(regs[i], p, "bbox_hi");
    scene.regions.push_back(r);
  }

  const json& objs = R::array(doc, "objects");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string p = "/objects/" + std::to_string(i);
    R::only_keys(objs[i], p, {"index", "region_index", "category_index", "center", "axis0", "axis1", "radii"});
    SceneObject o;
    o.index = R::integer(objs[i], p, "index");
    o.region_index = R::integer(objs[i], p, "region_index");
    o.category_index = R::integer(objs[i], p, "category_index");
    o.center = R::vec3(objs[i], p, "center");
    o.axis0 = R::vec3(objs[i], p, "axis0");
    o.axis1 = R::vec3(objs[i], p, "axis1");
    o.radii = R::vec3(objs[i], p, "radii");
    scene.objects.push_back(o);
  }

  const json& panos = R::array(doc, "panoramas");
  for (std::size_t i = 0; i < panos.size(); ++i) {
    const std::string p = "/panoramas/" + std::to_string(i);
    R::only_keys(panos[i], p, {"name", "index", "region_index", "position"});
    Panorama pano;
    pano.name = R::string(panos[i], p, "name");
    pano.index = R::integer(panos[i], p, "index");
    pano.region_index = R::integer(panos[i], p, "region_index");
    pano.position = R::vec3(panos[i], p, "position");
    scene.panoramas.push_back(std::move(pano));
  }

  validate_scene(scene);
  return scene;
}

}  // namespace vlnaug
