#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minsum/assignment.hpp"
#include "minsum/configuration.hpp"

namespace minsum {

enum class Algorithm { kDispatch, kLine, kAsymUnique, kSymUnique, kAsymMultiple, kRotSym };

const char* to_string(Algorithm alg);
// Accepts dispatch, line, asym-unique, sym-unique, asym-multiple, rot-sym.
Algorithm parse_algorithm(const std::string& text);

// Whether a robot's private notion of clockwise agrees with the global one.
// Only consulted when a decision would otherwise tie between mirror images.
enum class Chirality { kAligned, kMirrored };

struct Snapshot {
  Configuration config;
  std::size_t self = 0;
  Chirality chirality = Chirality::kAligned;
};

struct MoveDecision {
  enum class Kind { kStay, kMove };

  Kind kind = Kind::kStay;
  Scalar destination;
  Direction direction = Direction::kCw;

  static MoveDecision stay() { return {}; }
  static MoveDecision move(Scalar dest, Direction dir) { return {Kind::kMove, std::move(dest), dir}; }
  bool is_move() const { return kind == Kind::kMove; }
  bool operator==(const MoveDecision& other) const {
    if (kind != other.kind) return false;
    return kind == Kind::kStay || (destination == other.destination && direction == other.direction);
  }
};

enum class SelectionStatus {
  kAssigned,              // destinations hold the chosen assignment
  kRegular,               // already a regular n-gon, nothing to do
  kPreconditionViolated,  // the forced algorithm does not apply
  kUnsolvable,            // symmetric configuration with no invariant choice
  kPerRobot,              // mirror-image tie: each robot picks in its own frame
};

const char* to_string(SelectionStatus status);

// Which uniform-coverage assignment an algorithm commits to in a given
// configuration, as seen by every robot.
struct Selection {
  SelectionStatus status = SelectionStatus::kAssigned;
  // Circle only: class under the current extremal set.
  ConfigClass cls = ConfigClass::kI1;
  // Robots anchoring the chosen n-gon (all extremal robots sharing it).
  std::vector<std::size_t> anchors;
  std::vector<Scalar> destinations;
  std::string reason;
};

Selection select_assignment(const Configuration& config, Algorithm alg);

// What every robot computes from one configuration. Decisions only differ
// by chirality when a mirror-image tie is broken in the robot's own frame.
struct Plan {
  Selection selection;
  std::vector<MoveDecision> aligned;
  std::vector<MoveDecision> mirrored;

  const MoveDecision& decision(std::size_t robot, Chirality chirality) const {
    return chirality == Chirality::kAligned ? aligned[robot] : mirrored[robot];
  }
};

Plan make_plan(const Configuration& config, Algorithm alg);

// Robots that move when every robot follows `destinations`: on the circle
// those with a free shorter arc, minimal distance and minimal view; on the
// segment the free robot nearest the canonical endpoint (both mirror
// candidates when the segment is midpoint-symmetric).
std::vector<MoveDecision> movers_for(const Configuration& config, const std::vector<Scalar>& destinations,
                                     Chirality chirality = Chirality::kAligned);

// Snapshot-level entry points.
MoveDecision compute_line(const Snapshot& snap);
// Throws PreconditionViolated unless the optimal assignment is unique.
MoveDecision compute_asym_unique(const Snapshot& snap);
// Throws PreconditionViolated when symmetric with no extremal robot on an axis.
MoveDecision compute_sym_unique(const Snapshot& snap);
MoveDecision compute_asym_multiple(const Snapshot& snap);
// Throws PreconditionViolated when the extremal set is not one rotational class.
MoveDecision compute_rot_sym(const Snapshot& snap);
// Throws Unsolvable for symmetric configurations without an invariant
// assignment (classes I3 and I6 among them).
MoveDecision dispatch(const Snapshot& snap);

MoveDecision compute(const Snapshot& snap, Algorithm alg);

}  // namespace minsum
