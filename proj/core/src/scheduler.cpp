#include "minsum/scheduler.hpp"

#include <algorithm>
#include <numeric>

#include "minsum/error.hpp"

namespace minsum {

const char* to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::kFsync: return "fsync";
    case SchedulerKind::kSsync: return "ssync";
    case SchedulerKind::kAsync: return "async";
  }
  return "?";
}

const char* to_string(Adversary adversary) {
  switch (adversary) {
    case Adversary::kRoundRobin: return "round-robin";
    case Adversary::kSeededRandom: return "seeded-random";
    case Adversary::kSymmetryPreserving: return "symmetry-preserving";
    case Adversary::kPendingMaximizer: return "pending-maximizer";
  }
  return "?";
}

SchedulerKind parse_scheduler_kind(const std::string& text) {
  for (auto k : {SchedulerKind::kFsync, SchedulerKind::kSsync, SchedulerKind::kAsync}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError(0, "unknown scheduler '" + text + "'");
}

Adversary parse_adversary(const std::string& text) {
  for (auto a : {Adversary::kRoundRobin, Adversary::kSeededRandom, Adversary::kSymmetryPreserving,
                 Adversary::kPendingMaximizer}) {
    if (text == to_string(a)) return a;
  }
  throw ParseError(0, "unknown adversary '" + text + "'");
}

void SchedulerPolicy::validate() const {
  if (!(delta > 0)) throw Error(ErrorCode::kInvalidPolicy, "delta must be positive");
  if (fairness_bound < 1) throw Error(ErrorCode::kInvalidPolicy, "fairness bound must be at least 1");
  if (adversary == Adversary::kPendingMaximizer && kind != SchedulerKind::kAsync) {
    throw Error(ErrorCode::kInvalidPolicy, "pending-maximizer needs the async scheduler");
  }
}

bool Event::operator==(const Event& o) const {
  return kind == o.kind && tick == o.tick && robot == o.robot && positions == o.positions &&
         decision == o.decision && from == o.from && to == o.to && amount == o.amount &&
         direction == o.direction && robots == o.robots && label == o.label;
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kConverged: return "converged";
    case Outcome::kTickBudgetExceeded: return "budget-exceeded";
    case Outcome::kRefused: return "refused";
    case Outcome::kCollision: return "collision";
  }
  return "?";
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Orbits from a list of symmetries, each a permutation plus whether it
// reverses orientation.
SymmetryOrbits orbits_from(std::size_t n, const std::vector<std::pair<std::vector<std::size_t>, bool>>& maps) {
  UnionFind uf(n);
  for (const auto& [perm, reverses] : maps) {
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, perm[i]);
  }
  SymmetryOrbits out;
  out.chirality.assign(n, Chirality::kAligned);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (uf.find(root) != root) continue;
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      orbit.push_back(x);
      for (const auto& [perm, reverses] : maps) {
        const std::size_t y = perm[x];
        if (seen[y]) continue;
        seen[y] = true;
        const Chirality c = out.chirality[x];
        out.chirality[y] = reverses ? (c == Chirality::kAligned ? Chirality::kMirrored : Chirality::kAligned) : c;
        queue.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

SymmetryOrbits symmetry_orbits(const Configuration& config) {
  const std::size_t n = config.size();
  std::vector<std::pair<std::vector<std::size_t>, bool>> maps;
  if (config.space().is_circle()) {
    for (const auto& axis : find_lines_of_symmetry(config)) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = config.find(reflect(config[i], axis, config.space()));
      maps.emplace_back(std::move(perm), true);
    }
    const int w = rotational_order(config);
    if (w >= 2) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = (i + n / static_cast<std::size_t>(w)) % n;
      maps.emplace_back(std::move(perm), false);
    }
  } else if (is_midpoint_symmetric(config)) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
    maps.emplace_back(std::move(perm), true);
  }
  return orbits_from(n, maps);
}

Simulation::Simulation(Space space, std::vector<Scalar> positions, Algorithm alg, SchedulerPolicy policy)
    : space_(std::move(space)), alg_(alg), policy_(std::move(policy)), rng_(policy_.seed) {
  policy_.validate();
  const Configuration config(space_, positions);
  robots_.resize(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) robots_[i].position = positions[i];

  const auto ids = ids_in_order();
  if (policy_.adversary == Adversary::kSymmetryPreserving) {
    const auto sym = symmetry_orbits(config);
    for (const auto& orbit : sym.orbits) {
      std::vector<std::size_t> members;
      for (std::size_t k : orbit) members.push_back(ids[k]);
      std::sort(members.begin(), members.end());
      orbits_.push_back(std::move(members));
    }
    std::sort(orbits_.begin(), orbits_.end());
    for (std::size_t k = 0; k < ids.size(); ++k) robots_[ids[k]].chirality = sym.chirality[k];
  } else if (policy_.adversary == Adversary::kSeededRandom) {
    for (auto& r : robots_) r.chirality = coin() ? Chirality::kMirrored : Chirality::kAligned;
  }
}

bool Simulation::all_idle() const {
  return std::all_of(robots_.begin(), robots_.end(),
                     [](const RobotState& r) { return r.phase == RobotState::Phase::kIdle; });
}

std::vector<Scalar> Simulation::positions() const {
  std::vector<Scalar> out;
  out.reserve(robots_.size());
  for (const auto& r : robots_) out.push_back(r.position);
  return out;
}

Configuration Simulation::configuration() const { return Configuration(space_, positions()); }

std::vector<std::size_t> Simulation::ids_in_order() const {
  std::vector<std::size_t> ids(robots_.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t l, std::size_t r) { return robots_[l].position < robots_[r].position; });
  return ids;
}

const Plan& Simulation::current_plan() {
  if (plan_version_ != version_) {
    plan_ = make_plan(configuration(), alg_);
    plan_ids_ = ids_in_order();
    plan_version_ = version_;
  }
  return plan_;
}

bool Simulation::has_move(std::size_t id) const {
  const auto& r = robots_[id];
  return r.phase != RobotState::Phase::kIdle && r.decision.is_move();
}

void Simulation::look(std::size_t id, std::vector<Event>& events) {
  RobotState& r = robots_[id];
  Event snap;
  snap.kind = Event::Kind::kSnapshot;
  snap.tick = tick_;
  snap.robot = id;
  snap.positions = positions();
  events.push_back(std::move(snap));

  const Plan& plan = current_plan();
  const std::size_t k = static_cast<std::size_t>(std::find(plan_ids_.begin(), plan_ids_.end(), id) - plan_ids_.begin());
  r.decision = plan.decision(k, r.chirality);
  r.decision_tick = tick_;

  Event decided;
  decided.kind = Event::Kind::kDecided;
  decided.tick = tick_;
  decided.robot = id;
  decided.decision = r.decision;
  events.push_back(std::move(decided));

  if (r.decision.is_move()) {
    r.phase = RobotState::Phase::kComputed;
    r.remaining = travel_distance(r.position, r.decision.destination, r.decision.direction, space_);
  } else {
    r.phase = RobotState::Phase::kIdle;
  }
}

bool Simulation::displace(std::size_t id, const Scalar& amount, std::vector<Event>& events) {
  RobotState& r = robots_[id];
  const Direction dir = r.decision.direction;
  const Scalar to = advance(r.position, dir, amount, space_);
  for (std::size_t j = 0; j < robots_.size(); ++j) {
    if (j == id || !on_path(r.position, to, dir, robots_[j].position, space_)) continue;
    Event hit;
    hit.kind = Event::Kind::kCollision;
    hit.tick = tick_;
    hit.robot = id;
    hit.amount = robots_[j].position;
    hit.robots = {std::min(id, j), std::max(id, j)};
    events.push_back(std::move(hit));
    collided_ = true;
    return false;
  }
  Event moved;
  moved.kind = Event::Kind::kDisplaced;
  moved.tick = tick_;
  moved.robot = id;
  moved.from = r.position;
  moved.to = to;
  moved.amount = amount;
  moved.direction = dir;
  events.push_back(std::move(moved));

  r.position = to;
  r.remaining -= amount;
  r.phase = r.remaining == 0 ? RobotState::Phase::kIdle : RobotState::Phase::kMoving;
  ++version_;
  return true;
}

Scalar Simulation::choose_amount(const Scalar& remaining) {
  if (policy_.rigid) return remaining;
  const Scalar lo = std::min(policy_.delta, remaining);
  if (policy_.adversary != Adversary::kSeededRandom) return lo;
  if (coin()) return remaining;
  const long k = static_cast<long>(next_random() % 8);
  return lo + (remaining - lo) * k / 8;
}

std::vector<std::size_t> Simulation::forced() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    if (tick_ - robots_[i].last_activation >= policy_.fairness_bound) out.push_back(i);
  }
  return out;
}

void Simulation::async_tick(std::vector<Event>& events) {
  const std::size_t n = robots_.size();
  std::vector<std::size_t> chosen;
  if (policy_.adversary == Adversary::kSeededRandom) {
    for (std::size_t i = 0; i < n; ++i) {
      if (coin()) chosen.push_back(i);
    }
    if (chosen.empty()) chosen.push_back(next_random() % n);
  } else {
    chosen.push_back(static_cast<std::size_t>(tick_) % n);
  }
  for (std::size_t i : forced()) {
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) chosen.push_back(i);
  }
  if (policy_.adversary == Adversary::kSeededRandom) {
    for (std::size_t k = chosen.size(); k > 1; --k) std::swap(chosen[k - 1], chosen[next_random() % k]);
  }

  for (std::size_t id : chosen) {
    const bool eager = policy_.adversary == Adversary::kSeededRandom ? coin() : true;
    RobotState& r = robots_[id];
    events.push_back(Event::at(Event::Kind::kActivated, tick_, id));
    r.last_activation = tick_;
    if (r.phase == RobotState::Phase::kIdle) {
      look(id, events);
      if (!eager || r.phase == RobotState::Phase::kIdle) continue;
    }
    if (!displace(id, choose_amount(r.remaining), events)) return;
  }
}

std::vector<std::size_t> Simulation::round_subset() {
  const std::size_t n = robots_.size();
  std::vector<std::size_t> subset;
  if (policy_.kind == SchedulerKind::kFsync) {
    subset.resize(n);
    std::iota(subset.begin(), subset.end(), 0);
    return subset;
  }
  if (policy_.adversary == Adversary::kSeededRandom) {
    for (std::size_t i = 0; i < n; ++i) {
      if (coin()) subset.push_back(i);
    }
    if (subset.empty()) subset.push_back(next_random() % n);
  } else {
    subset.push_back(static_cast<std::size_t>(tick_) % n);
  }
  for (std::size_t i : forced()) subset.push_back(i);
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

void Simulation::round_tick(const std::vector<std::size_t>& subset, std::vector<Event>& events) {
  for (std::size_t id : subset) {
    events.push_back(Event::at(Event::Kind::kActivated, tick_, id));
    robots_[id].last_activation = tick_;
  }
  // Everyone in the round looks at the same configuration.
  std::vector<std::size_t> movers;
  for (std::size_t id : subset) {
    if (robots_[id].phase != RobotState::Phase::kIdle) continue;
    look(id, events);
    if (has_move(id)) movers.push_back(id);
  }
  std::vector<std::pair<std::size_t, Scalar>> pending;
  for (std::size_t id : movers) pending.emplace_back(id, choose_amount(robots_[id].remaining));

  // Apply simultaneous moves in an order where each swept path is clear;
  // if none is clear the next move runs into the collision check.
  while (!pending.empty()) {
    std::size_t pick = 0;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const auto& r = robots_[pending[k].first];
      const Scalar to = advance(r.position, r.decision.direction, pending[k].second, space_);
      const bool clear = std::none_of(robots_.begin(), robots_.end(), [&](const RobotState& o) {
        return &o != &r && on_path(r.position, to, r.decision.direction, o.position, space_);
      });
      if (clear) {
        pick = k;
        break;
      }
    }
    const auto [id, amount] = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    if (!displace(id, amount, events)) return;
  }
  // A round is a complete cycle; unfinished motion is abandoned.
  for (std::size_t id : subset) robots_[id].phase = RobotState::Phase::kIdle;
}

void Simulation::pending_maximizer_tick(std::vector<Event>& events) {
  std::vector<bool> active(robots_.size(), false);
  for (std::size_t id = 0; id < robots_.size(); ++id) {
    if (robots_[id].phase != RobotState::Phase::kIdle) continue;
    events.push_back(Event::at(Event::Kind::kActivated, tick_, id));
    robots_[id].last_activation = tick_;
    active[id] = true;
    look(id, events);
  }
  std::optional<std::size_t> leader;
  for (std::size_t id = 0; id < robots_.size(); ++id) {
    if (!has_move(id)) continue;
    if (!leader || robots_[id].decision_tick < robots_[*leader].decision_tick) leader = id;
  }
  std::vector<std::size_t> advance_ids;
  if (leader) advance_ids.push_back(*leader);
  for (std::size_t id : forced()) {
    if (!active[id] && id != leader) advance_ids.push_back(id);
  }
  for (std::size_t id : advance_ids) {
    if (!active[id]) {
      events.push_back(Event::at(Event::Kind::kActivated, tick_, id));
      robots_[id].last_activation = tick_;
    }
    if (!has_move(id)) continue;
    if (!displace(id, choose_amount(robots_[id].remaining), events)) return;
  }
}

void Simulation::symmetry_tick(std::vector<Event>& events) {
  std::vector<std::size_t> subset = orbits_[next_orbit_ % orbits_.size()];
  ++next_orbit_;
  for (std::size_t id : forced()) {
    for (const auto& orbit : orbits_) {
      if (std::find(orbit.begin(), orbit.end(), id) != orbit.end()) {
        subset.insert(subset.end(), orbit.begin(), orbit.end());
      }
    }
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  round_tick(subset, events);
}

std::vector<Event> Simulation::step() {
  std::vector<Event> events;
  if (collided_) return events;
  if (policy_.adversary == Adversary::kSymmetryPreserving) {
    symmetry_tick(events);
  } else if (policy_.kind == SchedulerKind::kAsync) {
    if (policy_.adversary == Adversary::kPendingMaximizer) {
      pending_maximizer_tick(events);
    } else {
      async_tick(events);
    }
  } else {
    round_tick(round_subset(), events);
  }
  ++tick_;
  return events;
}

std::int64_t budget_ticks(const Scalar& optimum, std::size_t n, const SchedulerPolicy& policy) {
  return static_cast<std::int64_t>(policy.fairness_bound) *
         (ceil_to_int(optimum / policy.delta) + static_cast<std::int64_t>(n) + 1);
}

Scalar optimal_cost(const Configuration& config) {
  if (config.space().is_circle()) return extremal_set(config).optimum;
  return assignment_cost(config, line_targets(config));
}

bool is_final(const Configuration& config) {
  if (config.space().is_circle()) return is_regular_polygon(config);
  return config.positions() == line_targets(config).points;
}

namespace {

// Sorted-index data re-expressed by robot id.
std::vector<std::size_t> ids_for(const std::vector<Scalar>& positions, const Configuration& config) {
  std::vector<std::size_t> ids(config.size());
  for (std::size_t id = 0; id < positions.size(); ++id) ids[config.find(positions[id])] = id;
  return ids;
}

}  // namespace

RunResult run(const Space& space, const std::vector<Scalar>& positions, Algorithm alg,
              const SchedulerPolicy& policy, const RunOptions& options) {
  policy.validate();
  const Configuration initial(space, positions);
  const std::size_t n = initial.size();
  RunResult result;
  result.initial = positions;
  result.optimum = optimal_cost(initial);
  result.budget = budget_ticks(result.optimum, n, policy);
  const std::int64_t max_ticks = options.max_ticks > 0 ? options.max_ticks : result.budget;

  auto finish = [&](const std::vector<Scalar>& final_positions) {
    result.final_positions = final_positions;
    Event fin;
    fin.kind = Event::Kind::kFinal;
    fin.tick = result.ticks;
    fin.positions = final_positions;
    result.trace.push_back(std::move(fin));
    return result;
  };

  if (space.is_circle()) {
    const auto report = extremal_set(initial);
    result.initial_class = classify(initial, report.extremal);
    if (!is_solvable(*result.initial_class) && !options.allow_unsolvable) {
      result.outcome = Outcome::kRefused;
      result.initial_selection.status = SelectionStatus::kUnsolvable;
      result.initial_selection.cls = *result.initial_class;
      result.initial_selection.reason = std::string("class ") + to_string(*result.initial_class) + " is unsolvable";
      Event refused;
      refused.kind = Event::Kind::kRefused;
      refused.label = to_string(*result.initial_class);
      result.trace.push_back(std::move(refused));
      return finish(positions);
    }
  }

  result.initial_selection = select_assignment(initial, alg);
  const auto initial_ids = ids_for(positions, initial);
  if (!result.initial_selection.destinations.empty()) {
    result.targets.resize(n);
    for (std::size_t k = 0; k < n; ++k) result.targets[initial_ids[k]] = result.initial_selection.destinations[k];
  }

  if (is_final(initial)) {
    result.outcome = Outcome::kConverged;
    result.trace.push_back(Event::at(Event::Kind::kConverged, 0));
    return finish(positions);
  }

  Simulation sim(space, positions, alg, policy);
  std::vector<std::size_t> extremal_ids;
  std::uint64_t seen_moves = ~std::uint64_t{0};
  std::uint64_t moves = 0;
  bool converged = false;
  while (sim.tick() < max_ticks) {
    auto events = sim.step();
    for (const auto& e : events) {
      if (e.kind == Event::Kind::kDisplaced) {
        result.total_distance += e.amount;
        ++moves;
      }
    }
    result.trace.insert(result.trace.end(), std::make_move_iterator(events.begin()),
                        std::make_move_iterator(events.end()));
    result.ticks = sim.tick();
    if (sim.collided()) {
      result.outcome = Outcome::kCollision;
      return finish(sim.positions());
    }

    const auto current = sim.positions();
    const Configuration config(space, current);
    Event check;
    check.kind = Event::Kind::kCheckpoint;
    check.tick = sim.tick() - 1;
    if (space.is_circle()) {
      if (moves != seen_moves) {
        const auto ids = ids_for(current, config);
        extremal_ids.clear();
        for (std::size_t k : extremal_set(config).extremal) extremal_ids.push_back(ids[k]);
        std::sort(extremal_ids.begin(), extremal_ids.end());
        seen_moves = moves;
      }
      check.robots = extremal_ids;
    }
    if (!result.targets.empty()) {
      for (std::size_t id = 0; id < n; ++id) {
        check.amount += space.is_circle() ? arc_distance(current[id], result.targets[id], space)
                                          : segment_distance(current[id], result.targets[id]);
      }
    } else {
      check.amount = optimal_cost(config);
    }
    result.trace.push_back(std::move(check));

    if (sim.all_idle() && is_final(config)) {
      converged = true;
      break;
    }
  }
  if (converged) {
    result.outcome = Outcome::kConverged;
    result.trace.push_back(Event::at(Event::Kind::kConverged, result.ticks));
  } else {
    result.outcome = Outcome::kTickBudgetExceeded;
    result.trace.push_back(Event::at(Event::Kind::kBudgetExceeded, result.ticks));
  }
  return finish(sim.positions());
}

}  // namespace minsum
