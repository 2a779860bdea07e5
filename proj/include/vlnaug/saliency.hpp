#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vlnaug/scene.hpp"
#include "vlnaug/view_geometry.hpp"

namespace vlnaug {

// An object as seen from one viewpoint.
struct ObservedObject {
  int object_index = 0;
  std::string category;
  double heading = 0.0;    // [0, 2π), clockwise from +Y
  double elevation = 0.0;  // [−π/2, π/2]
  double distance = 0.0;   // 3D, object center to viewpoint
  double area = 0.0;       // projected_area of the OBB
  bool unique = false;     // category occurs once among the same observation

  friend bool operator==(const ObservedObject&, const ObservedObject&) = default;
};

struct SaliencyConfig {
  double max_distance = 3.5;
  double min_area = 0.2;
  std::set<std::string> blacklist = {"floor", "ceiling", "wall", "column",
                                     "beam",  "misc",    "void", "unlabeled"};
  bool require_unique = true;
  geometry::FovConfig fov;

  friend bool operator==(const SaliencyConfig&, const SaliencyConfig&) = default;
};

// Throws vlnaug::Error when the config breaks its invariants.
void validate(const SaliencyConfig& cfg);

// Every object within max_distance (closed) of the viewpoint, nearest first,
// ties by object index.
std::vector<ObservedObject> observe(const SceneModel& scene, const Vec3& node_position,
                                    double max_distance);

// Stable filter by distance, area, usability and (optionally) uniqueness.
std::vector<ObservedObject> filter_candidates(const std::vector<ObservedObject>& observed,
                                              const SaliencyConfig& cfg);

// Candidate closest in bearing to target_heading among those inside the field
// of view. Ties: larger area, then nearer, then lower object index.
std::optional<ObservedObject> best_object(const std::vector<ObservedObject>& candidates,
                                          double target_heading,
                                          const geometry::FovConfig& fov);

enum class Relation { kLeft, kRight, kToward };

// Side on which the agent passes the object while travelling along
// target_heading. An object right of travel is passed on its left.
Relation side_of_travel(double target_heading, double object_heading);

const char* relation_name(Relation r);

// observe + filter_candidates + best_object at one viewpoint.
std::optional<ObservedObject> best_object_at(const SceneModel& scene, const Vec3& position,
                                             double target_heading,
                                             const SaliencyConfig& cfg);

}  // namespace vlnaug
