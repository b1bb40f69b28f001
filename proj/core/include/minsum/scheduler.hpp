#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "minsum/algorithms.hpp"

namespace minsum {

enum class SchedulerKind { kFsync, kSsync, kAsync };
enum class Adversary { kRoundRobin, kSeededRandom, kSymmetryPreserving, kPendingMaximizer };

const char* to_string(SchedulerKind kind);
const char* to_string(Adversary adversary);
SchedulerKind parse_scheduler_kind(const std::string& text);
Adversary parse_adversary(const std::string& text);

struct SchedulerPolicy {
  SchedulerKind kind = SchedulerKind::kAsync;
  std::uint64_t seed = 0;
  // Minimum distance a robot covers per displacement (unless it arrives first).
  Scalar delta = Scalar(1, 100);
  // Every robot is activated at least once in any window of this many ticks.
  int fairness_bound = 8;
  Adversary adversary = Adversary::kRoundRobin;
  // Every displacement covers the whole remaining distance.
  bool rigid = false;

  // Throws InvalidPolicy on delta <= 0, fairness_bound < 1, or a pending
  // maximizer outside ASYNC.
  void validate() const;
};

struct Event {
  enum class Kind {
    kActivated,
    kSnapshot,
    kDecided,
    kDisplaced,
    kCollision,
    kCheckpoint,
    kConverged,
    kBudgetExceeded,
    kRefused,
    kFinal,
  };

  Kind kind = Kind::kActivated;
  std::int64_t tick = 0;
  std::size_t robot = 0;
  // Snapshot and final positions, indexed by robot id.
  std::vector<Scalar> positions;
  MoveDecision decision;
  Scalar from;
  Scalar to;
  // Displacement length, collision point, or checkpoint remaining cost.
  Scalar amount;
  Direction direction = Direction::kCw;
  // Robots involved in a collision, or the extremal set at a checkpoint.
  std::vector<std::size_t> robots;
  // Refusal class.
  std::string label;

  static Event at(Kind kind, std::int64_t tick, std::size_t robot = 0) {
    Event e;
    e.kind = kind;
    e.tick = tick;
    e.robot = robot;
    return e;
  }

  bool operator==(const Event& other) const;
};

using Trace = std::vector<Event>;

struct RobotState {
  enum class Phase { kIdle, kComputed, kMoving };

  Scalar position;
  Phase phase = Phase::kIdle;
  MoveDecision decision;
  std::int64_t decision_tick = -1;
  Scalar remaining;
  Chirality chirality = Chirality::kAligned;
  std::int64_t last_activation = -1;
};

// One simulation: robots are identified by their index in the initial
// position list, independent of the sorted order a Configuration uses.
class Simulation {
 public:
  Simulation(Space space, std::vector<Scalar> positions, Algorithm alg, SchedulerPolicy policy);

  // Runs one tick and returns its events. Does nothing once a collision
  // has occurred.
  std::vector<Event> step();

  std::int64_t tick() const { return tick_; }
  bool collided() const { return collided_; }
  bool all_idle() const;
  const std::vector<RobotState>& robots() const { return robots_; }
  std::vector<Scalar> positions() const;
  const Space& space() const { return space_; }
  Configuration configuration() const;
  // Robot id at each sorted index of configuration().
  std::vector<std::size_t> ids_in_order() const;

 private:
  struct Activation {
    std::size_t robot;
    bool eager;
  };

  const Plan& current_plan();
  void look(std::size_t id, std::vector<Event>& events);
  bool displace(std::size_t id, const Scalar& amount, std::vector<Event>& events);
  Scalar choose_amount(const Scalar& remaining);
  std::vector<std::size_t> forced() const;
  bool has_move(std::size_t id) const;

  void async_tick(std::vector<Event>& events);
  void round_tick(const std::vector<std::size_t>& subset, std::vector<Event>& events);
  std::vector<std::size_t> round_subset();
  void pending_maximizer_tick(std::vector<Event>& events);
  void symmetry_tick(std::vector<Event>& events);

  std::uint64_t next_random() { return rng_(); }
  bool coin() { return (rng_() >> 11) & 1U; }

  Space space_;
  Algorithm alg_;
  SchedulerPolicy policy_;
  std::vector<RobotState> robots_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::size_t next_orbit_ = 0;
  std::mt19937_64 rng_;
  std::int64_t tick_ = 0;
  bool collided_ = false;
  std::uint64_t version_ = 0;
  std::uint64_t plan_version_ = ~std::uint64_t{0};
  Plan plan_;
  std::vector<std::size_t> plan_ids_;
};

// Groups of robots mapped onto each other by the symmetries of the
// configuration, with a chirality per robot that makes mirror images
// compute mirror-image decisions. Robot ids are sorted indices.
struct SymmetryOrbits {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<Chirality> chirality;
};
SymmetryOrbits symmetry_orbits(const Configuration& config);

enum class Outcome { kConverged, kTickBudgetExceeded, kRefused, kCollision };
const char* to_string(Outcome outcome);

struct RunOptions {
  std::int64_t max_ticks = 0;  // 0: use budget_ticks()
  // Run configurations the classifier marks unsolvable instead of refusing.
  bool allow_unsolvable = false;
};

struct RunResult {
  Outcome outcome = Outcome::kConverged;
  std::optional<ConfigClass> initial_class;
  Selection initial_selection;
  std::vector<Scalar> initial;
  std::vector<Scalar> final_positions;  // by robot id
  // Frozen initial destinations by robot id.
  std::vector<Scalar> targets;
  Trace trace;
  Scalar total_distance;
  // D* on a circle, the order-preserving cost on a segment.
  Scalar optimum;
  std::int64_t ticks = 0;
  std::int64_t budget = 0;
};

// fairness_bound * (ceil(optimum / delta) + n + 1).
std::int64_t budget_ticks(const Scalar& optimum, std::size_t n, const SchedulerPolicy& policy);

// Optimal total distance of the initial configuration.
Scalar optimal_cost(const Configuration& config);

// Whether the configuration is a final uniform placement: a regular n-gon
// on a circle, exactly the evenly spaced points on a segment.
bool is_final(const Configuration& config);

RunResult run(const Space& space, const std::vector<Scalar>& positions, Algorithm alg,
              const SchedulerPolicy& policy, const RunOptions& options = {});

}  // namespace minsum
