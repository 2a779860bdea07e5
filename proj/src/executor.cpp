#include "vlnaug/executor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "vlnaug/view_geometry.hpp"

namespace vlnaug {
namespace {

constexpr double kPi = std::numbers::pi;

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::optional<ObjectRef> parse_suffix(std::string_view rest) {
  ObjectRef ref;
  if (consume(rest, " down the left of the ")) {
    ref.relation = Relation::kLeft;
  } else if (consume(rest, " down the right of the ")) {
    ref.relation = Relation::kRight;
  } else if (consume(rest, " toward the ")) {
    ref.relation = Relation::kToward;
  } else {
    return std::nullopt;
  }
  if (rest.empty()) return std::nullopt;
  ref.category = std::string(rest);
  return ref;
}

std::optional<AtomicInstruction> parse_clause(std::string_view clause) {
  std::string_view rest = clause;
  if (rest == "Stop there") return make_atom(Turn::kNone, Motion::kStop, std::nullopt);
  if (consume(rest, "Stop right at the ")) {
    ObjectRef ref;
    if (consume(rest, "left of the ")) {
      ref.relation = Relation::kLeft;
    } else if (consume(rest, "right of the ")) {
      ref.relation = Relation::kRight;
    } else {
      ref.relation = Relation::kToward;
    }
    if (rest.empty()) return std::nullopt;
    ref.category = std::string(rest);
    return make_atom(Turn::kNone, Motion::kStop, std::move(ref));
  }

  Turn turn = Turn::kNone;
  if (consume(rest, "Turn left, ")) {
    turn = Turn::kLeft;
  } else if (consume(rest, "Turn right, ")) {
    turn = Turn::kRight;
  } else if (consume(rest, "Turn around, ")) {
    turn = Turn::kAround;
  }
  const bool capital = turn == Turn::kNone;

  struct Core {
    std::string_view lower, upper;
    Motion motion;
  };
  static constexpr Core kCores[] = {
      {"walk straight", "Walk straight", Motion::kWalkStraight},
      {"go up the stairs", "Go up the stairs", Motion::kGoUp},
      {"go down the stairs", "Go down the stairs", Motion::kGoDown},
  };
  for (const Core& core : kCores) {
    std::string_view tail = rest;
    if (!consume(tail, capital ? core.upper : core.lower)) continue;
    if (tail.empty()) return make_atom(turn, core.motion, std::nullopt);
    if (auto ref = parse_suffix(tail)) return make_atom(turn, core.motion, std::move(ref));
  }
  return std::nullopt;
}

}  // namespace

std::vector<AtomicInstruction> parse_crafted(std::string_view text) {
  if (text.empty() || text.back() != '.') {
    throw InstructionParseError(0, std::string(text));
  }
  text.remove_suffix(1);
  std::vector<AtomicInstruction> atoms;
  std::size_t pos = 0;
  for (std::size_t index = 0;; ++index) {
    const std::size_t end = text.find(". ", pos);
    const std::string_view clause =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    auto atom = parse_clause(clause);
    if (!atom) throw InstructionParseError(index, std::string(clause));
    if (!atoms.empty() && atoms.back().motion == Motion::kStop) {
      throw InstructionParseError(index, std::string(clause));
    }
    atoms.push_back(std::move(*atom));
    if (end == std::string_view::npos) break;
    pos = end + 2;
  }
  return atoms;
}

namespace {

double turn_centre(Turn t) {
  switch (t) {
    case Turn::kNone:
      return 0.0;
    case Turn::kRight:
      return kPi / 2.0;
    case Turn::kLeft:
      return -kPi / 2.0;
    case Turn::kAround:
      return kPi;
  }
  return 0.0;
}

}  // namespace

ExecutionResult execute(const NavGraph& graph, const SceneModel& scene, std::string_view start,
                        double heading_0, const std::vector<AtomicInstruction>& atoms,
                        const SaliencyConfig& cfg) {
  ExecutionResult result;
  std::string cur(graph.viewpoint(start).id);
  double heading = geometry::normalize_heading(heading_0);
  result.path.push_back(cur);

  for (const AtomicInstruction& atom : atoms) {
    if (atom.motion == Motion::kStop) {
      result.stopped = true;
      break;
    }
    const auto& nbrs = graph.neighbors(cur);
    if (nbrs.empty()) {
      result.failure_reason = "no neighbors at '" + cur + "'";
      break;
    }
    const Vec3& here = graph.viewpoint(cur).position;
    const double desired = geometry::normalize_heading(heading + turn_centre(atom.turn));

    const Neighbor* choice = nullptr;
    double choice_heading = 0.0;
    double best_score = std::numeric_limits<double>::infinity();
    for (const Neighbor& n : nbrs) {
      const double h = geometry::heading_to(here, graph.viewpoint(n.id).position).value;
      double score = std::abs(geometry::relative_bearing(desired, h));
      if (atom.object_ref) {
        auto obj = best_object_at(scene, here, h, cfg);
        if (obj && obj->category == atom.object_ref->category) score -= kPi;
      }
      if (score < best_score) {
        best_score = score;
        choice = &n;
        choice_heading = h;
      }
    }
    cur = choice->id;
    heading = choice_heading;
    result.path.push_back(cur);
  }
  if (!result.stopped && !result.failure_reason) {
    result.failure_reason = "instruction ended without a stop";
  }
  result.final_heading = heading;
  return result;
}

NavMetrics evaluate(const NavGraph& graph, const PathSpec& gold, const ExecutionResult& result,
                    double success_radius) {
  NavMetrics m;
  m.pl = graph.path_length(result.path);
  if (result.path.empty() || gold.path.empty()) {
    m.ne = std::numeric_limits<double>::infinity();
    return m;
  }
  const auto ne = geodesic_distance(graph, result.path.back(), gold.path.back());
  m.ne = ne ? *ne : std::numeric_limits<double>::infinity();
  m.sr = (result.stopped && m.ne <= success_radius) ? 1.0 : 0.0;
  const double denom = std::max(m.pl, gold.geodesic_length);
  m.spl = denom > 0.0 ? m.sr * gold.geodesic_length / denom : m.sr;
  return m;
}

NavMetrics mean_metrics(const std::vector<NavMetrics>& batch) {
  NavMetrics m;
  if (batch.empty()) return m;
  for (const auto& b : batch) {
    m.pl += b.pl;
    m.ne += b.ne;
    m.sr += b.sr;
    m.spl += b.spl;
  }
  const double n = static_cast<double>(batch.size());
  m.pl /= n;
  m.ne /= n;
  m.sr /= n;
  m.spl /= n;
  return m;
}

}  // namespace vlnaug
