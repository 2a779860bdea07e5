#include "vlnaug/crafter.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "vlnaug/error.hpp"
#include "vlnaug/view_geometry.hpp"

namespace vlnaug {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStairRise = 0.5;

std::string turn_prefix(Turn t) {
  switch (t) {
    case Turn::kNone:
      return "";
    case Turn::kLeft:
      return "Turn left, ";
    case Turn::kRight:
      return "Turn right, ";
    case Turn::kAround:
      return "Turn around, ";
  }
  return "";
}

std::string motion_core(Motion m) {
  switch (m) {
    case Motion::kWalkStraight:
      return "walk straight";
    case Motion::kGoUp:
      return "go up the stairs";
    case Motion::kGoDown:
      return "go down the stairs";
    case Motion::kStop:
      return "stop";
  }
  return "";
}

std::string object_suffix(const ObjectRef& ref) {
  switch (ref.relation) {
    case Relation::kLeft:
      return " down the left of the " + ref.category;
    case Relation::kRight:
      return " down the right of the " + ref.category;
    case Relation::kToward:
      return " toward the " + ref.category;
  }
  return "";
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

int region_of(const SceneModel& scene, std::string_view id) {
  const Panorama* p = scene.find_panorama(id);
  return p ? p->region_index : -1;
}

}  // namespace

const char* turn_name(Turn t) {
  switch (t) {
    case Turn::kNone:
      return "none";
    case Turn::kLeft:
      return "left";
    case Turn::kRight:
      return "right";
    case Turn::kAround:
      return "around";
  }
  return "?";
}

const char* motion_name(Motion m) {
  switch (m) {
    case Motion::kWalkStraight:
      return "walk_straight";
    case Motion::kGoUp:
      return "go_up";
    case Motion::kGoDown:
      return "go_down";
    case Motion::kStop:
      return "stop";
  }
  return "?";
}

Turn classify_turn(double bearing) {
  if (std::abs(bearing) < kPi / 8.0) return Turn::kNone;
  if (bearing >= kPi / 8.0 && bearing < 5.0 * kPi / 8.0) return Turn::kRight;
  if (bearing <= -kPi / 8.0 && bearing > -5.0 * kPi / 8.0) return Turn::kLeft;
  return Turn::kAround;
}

Motion classify_vertical(double dz, bool cross_region) {
  if (cross_region && dz > kStairRise) return Motion::kGoUp;
  if (cross_region && dz < -kStairRise) return Motion::kGoDown;
  return Motion::kWalkStraight;
}

std::string render_clause(Turn turn, Motion motion, const std::optional<ObjectRef>& ref) {
  if (motion == Motion::kStop) {
    if (!ref) return "Stop there";
    switch (ref->relation) {
      case Relation::kLeft:
        return "Stop right at the left of the " + ref->category;
      case Relation::kRight:
        return "Stop right at the right of the " + ref->category;
      case Relation::kToward:
        return "Stop right at the " + ref->category;
    }
  }
  std::string clause = turn_prefix(turn) + motion_core(motion);
  if (ref) clause += object_suffix(*ref);
  return capitalize(std::move(clause));
}

AtomicInstruction make_atom(Turn turn, Motion motion, std::optional<ObjectRef> ref) {
  AtomicInstruction atom;
  atom.turn = motion == Motion::kStop ? Turn::kNone : turn;
  atom.motion = motion;
  atom.object_ref = std::move(ref);
  atom.text = render_clause(atom.turn, atom.motion, atom.object_ref);
  return atom;
}

std::string join_clauses(const std::vector<AtomicInstruction>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ". ";
    out += atoms[i].text;
  }
  if (!atoms.empty()) out += ".";
  return out;
}

std::pair<AtomicInstruction, double> atomic_for_edge(const SceneModel& scene,
                                                     const NavGraph& graph,
                                                     const SaliencyConfig& cfg,
                                                     std::string_view cur,
                                                     std::string_view next,
                                                     double cur_heading) {
  if (!graph.edge_length(cur, next)) {
    throw Error("'" + std::string(cur) + "' -> '" + std::string(next) + "' is not an edge");
  }
  const Vec3& from = graph.viewpoint(cur).position;
  const Vec3& to = graph.viewpoint(next).position;
  const double target_heading = geometry::heading_to(from, to).value;
  const Turn turn = classify_turn(geometry::relative_bearing(cur_heading, target_heading));
  const Motion motion =
      classify_vertical(to.z - from.z, region_of(scene, cur) != region_of(scene, next));

  std::optional<ObjectRef> ref;
  if (auto obj = best_object_at(scene, from, target_heading, cfg)) {
    ref = ObjectRef{obj->category, side_of_travel(target_heading, obj->heading)};
  }
  return {make_atom(turn, motion, std::move(ref)), target_heading};
}

AtomicInstruction stop_atom(const SceneModel& scene, const NavGraph& graph,
                            std::string_view node, double incoming_heading,
                            const SaliencyConfig& cfg) {
  const Vec3& at = graph.viewpoint(node).position;
  std::optional<ObjectRef> ref;
  if (auto obj = best_object_at(scene, at, incoming_heading, cfg)) {
    ref = ObjectRef{obj->category, side_of_travel(incoming_heading, obj->heading)};
  }
  return make_atom(Turn::kNone, Motion::kStop, std::move(ref));
}

CraftedInstruction craft_instruction(const SceneModel& scene, const NavGraph& graph,
                                     const PathSpec& path, const SaliencyConfig& cfg) {
  if (path.path.empty()) throw Error("cannot craft an instruction for an empty path");
  CraftedInstruction out;
  double heading = path.heading_0;
  for (std::size_t i = 0; i + 1 < path.path.size(); ++i) {
    auto [atom, next_heading] =
        atomic_for_edge(scene, graph, cfg, path.path[i], path.path[i + 1], heading);
    heading = next_heading;
    out.atoms.push_back(std::move(atom));
    out.headings.push_back(heading);
  }
  out.atoms.push_back(stop_atom(scene, graph, path.path.back(), heading, cfg));
  out.headings.push_back(heading);
  out.text = join_clauses(out.atoms);
  return out;
}

}  // namespace vlnaug
