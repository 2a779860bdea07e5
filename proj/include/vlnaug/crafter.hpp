#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlnaug/nav_graph.hpp"
#include "vlnaug/saliency.hpp"
#include "vlnaug/scene.hpp"

namespace vlnaug {

enum class Turn { kNone, kLeft, kRight, kAround };
enum class Motion { kWalkStraight, kGoUp, kGoDown, kStop };

struct ObjectRef {
  std::string category;
  Relation relation = Relation::kToward;

  friend bool operator==(const ObjectRef&, const ObjectRef&) = default;
};

// One clause of a crafted instruction. `text` is always render_clause() of
// the other fields.
struct AtomicInstruction {
  Turn turn = Turn::kNone;
  Motion motion = Motion::kWalkStraight;
  std::optional<ObjectRef> object_ref;
  std::string text;

  friend bool operator==(const AtomicInstruction&, const AtomicInstruction&) = default;
};

struct CraftedInstruction {
  std::vector<AtomicInstruction> atoms;  // last atom is the stop atom
  std::string text;
  std::vector<double> headings;  // agent heading after each atom
};

const char* turn_name(Turn t);
const char* motion_name(Motion m);

// Turn classes are centred on 0, +π/2, −π/2 and π with boundaries at π/8 and
// 5π/8.
Turn classify_turn(double bearing);

// Stairs need both a vertical change above 0.5 m and a region change.
Motion classify_vertical(double dz, bool cross_region);

// Renders a clause from the closed template table, without the trailing
// period. Stop atoms ignore `turn`.
std::string render_clause(Turn turn, Motion motion, const std::optional<ObjectRef>& ref);

// Builds an atom with its text filled in.
AtomicInstruction make_atom(Turn turn, Motion motion, std::optional<ObjectRef> ref);

// Clauses joined by ". " with a terminal ".".
std::string join_clauses(const std::vector<AtomicInstruction>& atoms);

std::pair<AtomicInstruction, double> atomic_for_edge(const SceneModel& scene,
                                                     const NavGraph& graph,
                                                     const SaliencyConfig& cfg,
                                                     std::string_view cur,
                                                     std::string_view next,
                                                     double cur_heading);

AtomicInstruction stop_atom(const SceneModel& scene, const NavGraph& graph,
                            std::string_view node, double incoming_heading,
                            const SaliencyConfig& cfg);

CraftedInstruction craft_instruction(const SceneModel& scene, const NavGraph& graph,
                                     const PathSpec& path, const SaliencyConfig& cfg);

}  // namespace vlnaug
