#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlnaug/vec3.hpp"

namespace vlnaug {

struct Category {
  int index = 0;
  int mapping_index = 0;
  std::string name;  // lowercase, words joined by single spaces
  int mpcat40_index = 0;
  std::string mpcat40_name;

  friend bool operator==(const Category&, const Category&) = default;
};

struct Region {
  int index = 0;
  int level_index = 0;
  char label = '-';
  Vec3 position;
  Vec3 bbox_lo;
  Vec3 bbox_hi;

  friend bool operator==(const Region&, const Region&) = default;
};

// Oriented bounding box. The third axis is axis0 × axis1 and is not stored.
struct SceneObject {
  int index = 0;
  int region_index = -1;  // −1: unassigned
  int category_index = 0;
  Vec3 center;
  Vec3 axis0;
  Vec3 axis1;
  Vec3 radii;  // half-extents along axis0, axis1, axis0 × axis1

  Vec3 axis2() const { return axis0.cross(axis1); }

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

struct Panorama {
  std::string name;  // viewpoint id
  int index = 0;
  int region_index = -1;
  Vec3 position;

  friend bool operator==(const Panorama&, const Panorama&) = default;
};

// Parsed scene metadata. Every list is sorted by its declared index and every
// cross-index resolves.
struct SceneModel {
  std::string scan_id;
  std::vector<Category> categories;
  std::vector<Region> regions;
  std::vector<SceneObject> objects;
  std::vector<Panorama> panoramas;

  friend bool operator==(const SceneModel&, const SceneModel&) = default;

  // nullptr when no panorama carries this name.
  const Panorama* find_panorama(std::string_view name) const;
};

// Parses the `.house` subset (H, L, R, C, P, O records). Throws ParseError
// naming the line and record type on any violation.
SceneModel parse_house(std::string_view text);

// Checks every invariant of a SceneModel; throws SchemaError with the path of
// the first offending field.
void validate_scene(const SceneModel& scene);

// Category name of an object. Throws vlnaug::Error for an invalid index.
const std::string& category_name(const SceneModel& scene, int object_index);

// Last whitespace-separated token: "chest of drawers" -> "drawers".
std::string head_noun(std::string_view name);

// Canonical JSON: lists sorted by index, numbers with six decimals.
std::string write_scene_json(const SceneModel& scene);
SceneModel read_scene_json(std::string_view text);

}  // namespace vlnaug
