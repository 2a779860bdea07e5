#include "vlnaug/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "vlnaug/error.hpp"
#include "vlnaug/simd/kernels.hpp"

namespace vlnaug {

void validate(const SaliencyConfig& cfg) {
  if (!(cfg.max_distance > 0.0)) throw Error("max_distance must be positive");
  if (!(cfg.min_area >= 0.0)) throw Error("min_area must be non-negative");
  geometry::validate(cfg.fov);
}

std::vector<ObservedObject> observe(const SceneModel& scene, const Vec3& node_position,
                                    double max_distance) {
  const std::size_t n = scene.objects.size();
  std::vector<double> xs(n), ys(n), zs(n), dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = scene.objects[i].center.x;
    ys[i] = scene.objects[i].center.y;
    zs[i] = scene.objects[i].center.z;
  }
  simd::point_distances(xs, ys, zs, node_position, dist);

  std::vector<ObservedObject> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(dist[i] <= max_distance)) continue;
    const SceneObject& o = scene.objects[i];
    ObservedObject obs;
    obs.object_index = o.index;
    obs.category = category_name(scene, o.index);
    obs.heading = geometry::heading_to(node_position, o.center).value;
    obs.elevation = geometry::elevation_to(node_position, o.center);
    obs.distance = dist[i];
    obs.area = geometry::projected_area(o.radii);
    out.push_back(std::move(obs));
  }
  std::map<std::string, int> counts;
  for (const auto& o : out) ++counts[o.category];
  for (auto& o : out) o.unique = counts[o.category] == 1;
  std::sort(out.begin(), out.end(), [](const ObservedObject& a, const ObservedObject& b) {
    return std::tie(a.distance, a.object_index) < std::tie(b.distance, b.object_index);
  });
  return out;
}

std::vector<ObservedObject> filter_candidates(const std::vector<ObservedObject>& observed,
                                              const SaliencyConfig& cfg) {
  std::vector<ObservedObject> out;
  for (const auto& o : observed) {
    if (o.distance > cfg.max_distance) continue;
    if (o.area < cfg.min_area) continue;
    if (cfg.blacklist.count(o.category)) continue;
    if (cfg.require_unique && !o.unique) continue;
    out.push_back(o);
  }
  return out;
}

std::optional<ObservedObject> best_object(const std::vector<ObservedObject>& candidates,
                                          double target_heading,
                                          const geometry::FovConfig& fov) {
  const ObservedObject* best = nullptr;
  double best_bearing = 0.0;
  for (const auto& o : candidates) {
    const double bearing = geometry::relative_bearing(target_heading, o.heading);
    if (!geometry::in_fov(bearing, o.elevation, fov)) continue;
    const double key = std::abs(bearing);
    if (!best) {
      best = &o;
      best_bearing = key;
      continue;
    }
    // (|bearing|, −area, distance, index) ascending.
    if (std::make_tuple(key, -o.area, o.distance, o.object_index) <
        std::make_tuple(best_bearing, -best->area, best->distance, best->object_index)) {
      best = &o;
      best_bearing = key;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

Relation side_of_travel(double target_heading, double object_heading) {
  const double d = geometry::relative_bearing(target_heading, object_heading);
  constexpr double kTowardHalfWidth = std::numbers::pi / 12.0;
  if (std::abs(d) <= kTowardHalfWidth) return Relation::kToward;
  return d > 0.0 ? Relation::kLeft : Relation::kRight;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kLeft:
      return "left";
    case Relation::kRight:
      return "right";
    case Relation::kToward:
      return "toward";
  }
  return "?";
}

std::optional<ObservedObject> best_object_at(const SceneModel& scene, const Vec3& position,
                                             double target_heading,
                                             const SaliencyConfig& cfg) {
  return best_object(filter_candidates(observe(scene, position, cfg.max_distance), cfg),
                     target_heading, cfg.fov);
}

}  // namespace vlnaug
