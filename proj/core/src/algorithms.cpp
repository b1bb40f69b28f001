#include "minsum/algorithms.hpp"

#include <algorithm>
#include <map>

#include "minsum/error.hpp"

namespace minsum {

const char* to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kDispatch: return "dispatch";
    case Algorithm::kLine: return "line";
    case Algorithm::kAsymUnique: return "asym-unique";
    case Algorithm::kSymUnique: return "sym-unique";
    case Algorithm::kAsymMultiple: return "asym-multiple";
    case Algorithm::kRotSym: return "rot-sym";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& text) {
  for (auto alg : {Algorithm::kDispatch, Algorithm::kLine, Algorithm::kAsymUnique, Algorithm::kSymUnique,
                   Algorithm::kAsymMultiple, Algorithm::kRotSym}) {
    if (text == to_string(alg)) return alg;
  }
  throw ParseError(0, "unknown algorithm '" + text + "'");
}

const char* to_string(SelectionStatus status) {
  switch (status) {
    case SelectionStatus::kAssigned: return "assigned";
    case SelectionStatus::kRegular: return "regular";
    case SelectionStatus::kPreconditionViolated: return "precondition-violated";
    case SelectionStatus::kUnsolvable: return "unsolvable";
    case SelectionStatus::kPerRobot: return "per-robot";
  }
  return "?";
}

namespace {

Direction local_cw(Chirality chirality) {
  return chirality == Chirality::kAligned ? Direction::kCw : Direction::kCcw;
}

std::vector<Scalar> others_of(const Configuration& config, std::size_t i) {
  std::vector<Scalar> out;
  out.reserve(config.size() - 1);
  for (std::size_t k = 0; k < config.size(); ++k) {
    if (k != i) out.push_back(config[k]);
  }
  return out;
}

std::vector<MoveDecision> circle_movers(const Configuration& config, const std::vector<Scalar>& dest,
                                        Chirality chirality) {
  const std::size_t n = config.size();
  const Space& space = config.space();
  std::vector<MoveDecision> out(n);

  struct Candidate {
    std::size_t robot;
    Scalar distance;
    Direction dir;
  };
  std::vector<Candidate> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (config[i] == dest[i]) continue;
    const Scalar cw = directed_arc(config[i], dest[i], Direction::kCw, space);
    const Scalar ccw = space.circumference() - cw;
    const auto others = others_of(config, i);
    std::vector<Direction> options;
    if (cw <= ccw) options.push_back(Direction::kCw);
    if (ccw <= cw) options.push_back(Direction::kCcw);
    std::vector<Direction> open;
    for (Direction d : options) {
      if (path_is_free(config[i], dest[i], d, others, space)) open.push_back(d);
    }
    if (open.empty()) continue;
    // Both half circles free only happens for a lone robot; take local clockwise.
    const Direction dir = open.size() == 1 ? open.front() : local_cw(chirality);
    free.push_back({i, cw < ccw ? cw : ccw, dir});
  }
  if (free.empty()) return out;

  Scalar best = free.front().distance;
  for (const auto& c : free) best = std::min(best, c.distance);
  std::vector<const Candidate*> nearest;
  for (const auto& c : free) {
    if (c.distance == best) nearest.push_back(&c);
  }
  std::vector<View> views;
  for (const auto* c : nearest) views.push_back(min_view(config, c->robot));
  const View& min = *std::min_element(views.begin(), views.end());
  for (std::size_t k = 0; k < nearest.size(); ++k) {
    if (views[k] == min) out[nearest[k]->robot] = MoveDecision::move(dest[nearest[k]->robot], nearest[k]->dir);
  }
  return out;
}

std::vector<MoveDecision> segment_movers(const Configuration& config, const std::vector<Scalar>& dest) {
  const std::size_t n = config.size();
  std::vector<MoveDecision> out(n);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (config[i] == dest[i]) continue;
    const Direction dir = dest[i] > config[i] ? Direction::kCw : Direction::kCcw;
    const auto others = others_of(config, i);
    if (path_is_free(config[i], dest[i], dir, others, config.space())) free.push_back(i);
  }
  if (free.empty()) return out;

  // Orient the segment from the endpoint with the smaller distance profile;
  // robots cannot tell the endpoints apart otherwise.
  const auto from_a = segment_profile(config, Endpoint::kA);
  const auto from_b = segment_profile(config, Endpoint::kB);
  std::vector<std::size_t> chosen;
  if (from_a <= from_b) chosen.push_back(free.front());
  if (from_b <= from_a && (chosen.empty() || chosen.front() != free.back())) chosen.push_back(free.back());
  for (std::size_t i : chosen) {
    out[i] = MoveDecision::move(dest[i], dest[i] > config[i] ? Direction::kCw : Direction::kCcw);
  }
  return out;
}

// Everything the circle selection rules need about one configuration.
struct CircleFacts {
  CostReport report;
  std::vector<std::vector<std::size_t>> groups;
  SymmetryReport symmetry;
};

CircleFacts circle_facts(const Configuration& config) {
  CircleFacts f;
  f.report = extremal_set(config);
  f.groups = distinct_assignments(config, f.report);
  f.symmetry = analyze_symmetry(config, f.report.extremal);
  return f;
}

Selection assign(const Configuration& config, const std::vector<std::size_t>& group, const CircleFacts& f) {
  Selection s;
  s.status = SelectionStatus::kAssigned;
  s.cls = f.symmetry.cls;
  s.anchors = group;
  s.destinations = ngon_targets(config, group.front()).destinations();
  return s;
}

Selection refuse(SelectionStatus status, const CircleFacts& f, std::string reason) {
  Selection s;
  s.status = status;
  s.cls = f.symmetry.cls;
  s.reason = std::move(reason);
  return s;
}

const std::vector<std::size_t>& group_of(const CircleFacts& f, std::size_t robot) {
  for (const auto& g : f.groups) {
    if (std::find(g.begin(), g.end(), robot) != g.end()) return g;
  }
  throw Error(ErrorCode::kIndexOutOfRange, "robot is not extremal");
}

Scalar squared_distance_sum(const Configuration& config, std::size_t anchor) {
  const auto dest = ngon_targets(config, anchor).destinations();
  Scalar sum = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Scalar d = arc_distance(config[i], dest[i], config.space());
    sum += d * d;
  }
  return sum;
}

// Among several optimal assignments, the one with the largest sum of squared
// distances. Along a flat stretch of optimal rotations each distance is
// linear in the rotation, so this picks an end of the stretch. Remaining ties
// go to the extremal anchor with the smallest view; mirror-image ties are left
// to each robot's own frame.
Selection select_by_view(const Configuration& config, const CircleFacts& f) {
  if (f.groups.size() == 1) return assign(config, f.groups.front(), f);
  std::vector<Scalar> spread;
  for (const auto& g : f.groups) spread.push_back(squared_distance_sum(config, g.front()));
  const Scalar best = *std::max_element(spread.begin(), spread.end());
  std::vector<std::size_t> candidates;
  for (std::size_t g = 0; g < f.groups.size(); ++g) {
    if (spread[g] == best) candidates.insert(candidates.end(), f.groups[g].begin(), f.groups[g].end());
  }
  std::vector<View> views;
  for (std::size_t e : candidates) views.push_back(min_view(config, e));
  const View& min = *std::min_element(views.begin(), views.end());
  std::vector<std::size_t> tied;
  for (std::size_t k = 0; k < views.size(); ++k) {
    if (views[k] == min) tied.push_back(candidates[k]);
  }
  if (tied.size() == 1) return assign(config, group_of(f, tied.front()), f);
  Selection s = refuse(SelectionStatus::kPerRobot, f, "extremal robots share the smallest view");
  std::sort(tied.begin(), tied.end());
  s.anchors = tied;
  return s;
}

// The assignment anchored by extremal robots on a line of symmetry, when
// exactly one such assignment exists.
Selection select_by_axis(const Configuration& config, const CircleFacts& f, SelectionStatus if_none) {
  std::vector<std::size_t> hits;
  for (std::size_t g = 0; g < f.groups.size(); ++g) {
    const bool on = std::any_of(f.groups[g].begin(), f.groups[g].end(), [&](std::size_t r) {
      return std::any_of(f.symmetry.lines_of_symmetry.begin(), f.symmetry.lines_of_symmetry.end(),
                         [&](const Axis& axis) { return on_axis(config[r], axis); });
    });
    if (on) hits.push_back(g);
  }
  if (hits.empty()) return refuse(if_none, f, "no extremal robot on a line of symmetry");
  if (hits.size() > 1) {
    return refuse(SelectionStatus::kUnsolvable, f, "axis robots anchor different assignments");
  }
  return assign(config, f.groups[hits.front()], f);
}

Selection select_by_class(const Configuration& config, const CircleFacts& f) {
  if (f.symmetry.rotational_order < 2) return select_by_view(config, f);
  const auto classes = rotational_classes(config);
  for (const auto& cls : classes) {
    if (cls.size() == f.report.extremal.size() &&
        std::is_permutation(cls.begin(), cls.end(), f.report.extremal.begin())) {
      return assign(config, group_of(f, cls.front()), f);
    }
  }
  return refuse(SelectionStatus::kPreconditionViolated, f, "extremal set is not one rotational class");
}

Selection select_circle(const Configuration& config, Algorithm alg) {
  if (is_regular_polygon(config)) {
    Selection s;
    s.status = SelectionStatus::kRegular;
    s.cls = ConfigClass::kI5;
    for (std::size_t i = 0; i < config.size(); ++i) s.anchors.push_back(i);
    s.destinations = config.positions();
    return s;
  }
  const CircleFacts f = circle_facts(config);
  switch (alg) {
    case Algorithm::kAsymUnique:
      if (f.groups.size() == 1) return assign(config, f.groups.front(), f);
      return refuse(SelectionStatus::kPreconditionViolated, f, "optimal assignment is not unique");
    case Algorithm::kAsymMultiple:
      return select_by_view(config, f);
    case Algorithm::kSymUnique:
      if (f.symmetry.lines_of_symmetry.empty()) return select_by_view(config, f);
      return select_by_axis(config, f, SelectionStatus::kPreconditionViolated);
    case Algorithm::kRotSym:
      return select_by_class(config, f);
    case Algorithm::kDispatch:
      break;
    case Algorithm::kLine:
      return refuse(SelectionStatus::kPreconditionViolated, f, "segment algorithm on a circle");
  }
  // A unique optimal assignment is invariant under every symmetry of the
  // configuration, so it can be followed whatever the class.
  if (f.groups.size() == 1) return assign(config, f.groups.front(), f);
  switch (f.symmetry.cls) {
    case ConfigClass::kI1: return select_by_view(config, f);
    case ConfigClass::kI2:
    case ConfigClass::kI5: return select_by_axis(config, f, SelectionStatus::kUnsolvable);
    case ConfigClass::kI4: {
      Selection s = select_by_class(config, f);
      if (s.status == SelectionStatus::kPreconditionViolated) s.status = SelectionStatus::kUnsolvable;
      return s;
    }
    case ConfigClass::kI3:
    case ConfigClass::kI6: break;
  }
  return refuse(SelectionStatus::kUnsolvable, f, std::string("class ") + to_string(f.symmetry.cls));
}

// First tied anchor met when sweeping clockwise in the robot's own frame,
// starting with the robot itself.
std::size_t local_anchor(const Configuration& config, std::size_t robot, const std::vector<std::size_t>& tied,
                         Chirality chirality) {
  const std::size_t n = config.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = chirality == Chirality::kAligned ? (robot + k) % n : (robot + n - k) % n;
    if (std::find(tied.begin(), tied.end(), r) != tied.end()) return r;
  }
  return tied.front();
}

}  // namespace

std::vector<MoveDecision> movers_for(const Configuration& config, const std::vector<Scalar>& destinations,
                                     Chirality chirality) {
  if (destinations.size() != config.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "one destination per robot required");
  }
  if (config.space().is_circle()) return circle_movers(config, destinations, chirality);
  return segment_movers(config, destinations);
}

Selection select_assignment(const Configuration& config, Algorithm alg) {
  if (config.space().is_circle()) return select_circle(config, alg);
  Selection s;
  if (alg != Algorithm::kLine && alg != Algorithm::kDispatch) {
    s.status = SelectionStatus::kPreconditionViolated;
    s.reason = "circle algorithm on a segment";
    return s;
  }
  s.destinations = line_targets(config).destinations();
  return s;
}

Plan make_plan(const Configuration& config, Algorithm alg) {
  Plan plan;
  plan.selection = select_assignment(config, alg);
  const std::size_t n = config.size();
  switch (plan.selection.status) {
    case SelectionStatus::kAssigned:
      plan.aligned = movers_for(config, plan.selection.destinations, Chirality::kAligned);
      // Chirality only matters for a lone robot facing two free half circles.
      plan.mirrored = n == 1 ? movers_for(config, plan.selection.destinations, Chirality::kMirrored) : plan.aligned;
      break;
    case SelectionStatus::kPerRobot: {
      std::map<std::pair<std::size_t, Chirality>, std::vector<MoveDecision>> cache;
      auto decide = [&](std::size_t robot, Chirality chirality) {
        const std::size_t anchor = local_anchor(config, robot, plan.selection.anchors, chirality);
        auto key = std::make_pair(anchor, chirality);
        auto it = cache.find(key);
        if (it == cache.end()) {
          it = cache.emplace(key, movers_for(config, ngon_targets(config, anchor).destinations(), chirality)).first;
        }
        return it->second[robot];
      };
      for (std::size_t i = 0; i < n; ++i) {
        plan.aligned.push_back(decide(i, Chirality::kAligned));
        plan.mirrored.push_back(decide(i, Chirality::kMirrored));
      }
      break;
    }
    default:
      plan.aligned.assign(n, MoveDecision::stay());
      plan.mirrored = plan.aligned;
  }
  return plan;
}

namespace {

MoveDecision decide_or_throw(const Snapshot& snap, Algorithm alg) {
  if (snap.self >= snap.config.size()) throw Error(ErrorCode::kIndexOutOfRange, "observer index out of range");
  const Plan plan = make_plan(snap.config, alg);
  switch (plan.selection.status) {
    case SelectionStatus::kPreconditionViolated:
      throw Error(ErrorCode::kPreconditionViolated, plan.selection.reason);
    case SelectionStatus::kUnsolvable:
      throw Error(ErrorCode::kUnsolvable, plan.selection.reason);
    default:
      return plan.decision(snap.self, snap.chirality);
  }
}

}  // namespace

MoveDecision compute_line(const Snapshot& snap) { return decide_or_throw(snap, Algorithm::kLine); }
MoveDecision compute_asym_unique(const Snapshot& snap) { return decide_or_throw(snap, Algorithm::kAsymUnique); }
MoveDecision compute_sym_unique(const Snapshot& snap) { return decide_or_throw(snap, Algorithm::kSymUnique); }
MoveDecision compute_asym_multiple(const Snapshot& snap) { return decide_or_throw(snap, Algorithm::kAsymMultiple); }
MoveDecision compute_rot_sym(const Snapshot& snap) { return decide_or_throw(snap, Algorithm::kRotSym); }
MoveDecision dispatch(const Snapshot& snap) { return decide_or_throw(snap, Algorithm::kDispatch); }

MoveDecision compute(const Snapshot& snap, Algorithm alg) { return decide_or_throw(snap, alg); }

}  // namespace minsum
