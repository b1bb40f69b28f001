#include "minsum/verify.hpp"

#include <algorithm>
#include <map>

#include "minsum/error.hpp"

namespace minsum {

bool VerificationReport::ok() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

bool same_policy(const SchedulerPolicy& a, const SchedulerPolicy& b) {
  return a.kind == b.kind && a.adversary == b.adversary && a.seed == b.seed && a.delta == b.delta &&
         a.fairness_bound == b.fairness_bound && a.rigid == b.rigid;
}

Scalar distance(const Space& space, const Scalar& x, const Scalar& y) {
  return space.is_circle() ? arc_distance(x, y, space) : segment_distance(x, y);
}

// Maps values indexed by sorted position back to robot ids.
std::vector<std::size_t> sorted_to_ids(const std::vector<Scalar>& positions, const Configuration& config) {
  std::vector<std::size_t> ids(config.size());
  for (std::size_t id = 0; id < positions.size(); ++id) ids[config.find(positions[id])] = id;
  return ids;
}

class Checker {
 public:
  Checker(const TraceFile& trace, const Scenario& scenario) : trace_(trace), scenario_(scenario) {
    for (const char* name : {"header", "replay", "collision-freedom", "fairness", "delta-floor", "cost-monotonicity",
                             "anchor-invariance", "final-regularity", "distance-optimality"}) {
      index_[name] = report_.checks.size();
      CheckResult c;
      c.name = name;
      report_.checks.push_back(std::move(c));
    }
  }

  VerificationReport run();

 private:
  CheckResult& check(const std::string& name) { return report_.checks[index_.at(name)]; }

  void fail(const std::string& name, std::int64_t tick, std::string detail, std::size_t event = kNoEvent) {
    CheckResult& c = check(name);
    if (!c.passed) return;
    c.passed = false;
    c.first_tick = tick;
    c.detail = std::move(detail);
    if (event != kNoEvent) {
      c.excerpt.push_back("line " + std::to_string(trace_.lines[event]) + ": " + format_event(trace_.events[event]));
    }
  }

  void skip(const std::string& name, std::string why) {
    CheckResult& c = check(name);
    c.skipped = true;
    c.detail = std::move(why);
  }

  void close_tick(std::int64_t tick, bool moved, std::size_t checkpoint);
  void check_fairness_tail(std::int64_t ticks);

  static constexpr std::size_t kNoEvent = ~std::size_t{0};

  const TraceFile& trace_;
  const Scenario& scenario_;
  VerificationReport report_;
  std::map<std::string, std::size_t> index_;

  std::vector<Scalar> pos_;
  std::vector<Scalar> targets_;
  std::vector<std::size_t> anchors_;
  Scalar remaining_;
  std::vector<std::int64_t> last_activation_;
  bool collided_ = false;
};

void Checker::close_tick(std::int64_t tick, bool moved, std::size_t checkpoint) {
  const bool has_checkpoint = checkpoint != kNoEvent;
  if (collided_) return;
  const Space& space = scenario_.space;
  if (!targets_.empty()) {
    Scalar now = 0;
    for (std::size_t id = 0; id < pos_.size(); ++id) now += distance(space, pos_[id], targets_[id]);
    if (moved ? !(now < remaining_) : now > remaining_) {
      fail("cost-monotonicity", tick,
           "remaining distance went from " + to_string(remaining_) + " to " + to_string(now) +
               (moved ? " across a displacement tick" : ""),
           checkpoint);
    }
    if (has_checkpoint && trace_.events[checkpoint].amount != now) {
      fail("cost-monotonicity", tick,
           "checkpoint records " + to_string(trace_.events[checkpoint].amount) + ", replay gives " + to_string(now),
           checkpoint);
    }
    remaining_ = now;
  }
  if (!moved || !space.is_circle() || check("anchor-invariance").skipped) return;

  const Configuration config(space, pos_);
  const auto ids = sorted_to_ids(pos_, config);
  std::vector<std::size_t> extremal;
  for (std::size_t k : extremal_set(config).extremal) extremal.push_back(ids[k]);
  std::sort(extremal.begin(), extremal.end());
  for (std::size_t a : anchors_) {
    if (!std::binary_search(extremal.begin(), extremal.end(), a)) {
      fail("anchor-invariance", tick, "initial anchor robot " + std::to_string(a) + " left the extremal set",
           checkpoint);
    }
  }
  if (has_checkpoint && trace_.events[checkpoint].robots != extremal) {
    fail("anchor-invariance", tick, "checkpoint extremal set differs from replay", checkpoint);
  }
  const Selection sel = select_assignment(config, scenario_.algorithm);
  if (sel.destinations.empty()) {
    fail("anchor-invariance", tick, std::string("no assignment selected: ") + to_string(sel.status),
         checkpoint);
    return;
  }
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (sel.destinations[k] != targets_[ids[k]]) {
      fail("anchor-invariance", tick,
           "target of robot " + std::to_string(ids[k]) + " changed from " + to_string(targets_[ids[k]]) + " to " +
               to_string(sel.destinations[k]),
           checkpoint);
      break;
    }
  }
}

void Checker::check_fairness_tail(std::int64_t ticks) {
  const int k = scenario_.policy.fairness_bound;
  for (std::size_t id = 0; id < last_activation_.size(); ++id) {
    if (ticks - 1 - last_activation_[id] >= k) {
      fail("fairness", last_activation_[id] + k,
           "robot " + std::to_string(id) + " not activated within " + std::to_string(k) + " ticks");
    }
  }
}

VerificationReport Checker::run() {
  const Space& space = scenario_.space;
  if (!(trace_.space == space) || trace_.initial != scenario_.positions || trace_.algorithm != scenario_.algorithm ||
      !same_policy(trace_.policy, scenario_.policy)) {
    fail("header", 0, "trace header does not match the scenario");
  }

  const Configuration initial(space, scenario_.positions);
  const std::size_t n = initial.size();
  pos_ = scenario_.positions;
  last_activation_.assign(n, -1);

  const bool refused = std::any_of(trace_.events.begin(), trace_.events.end(),
                                   [](const Event& e) { return e.kind == Event::Kind::kRefused; });
  if (refused) {
    report_.refused = true;
    for (auto& c : report_.checks) {
      if (c.name != "header") {
        c.skipped = true;
        c.detail = "run refused";
      }
    }
    return report_;
  }

  const Selection sel0 = select_assignment(initial, scenario_.algorithm);
  if (!sel0.destinations.empty()) {
    const auto ids = sorted_to_ids(pos_, initial);
    targets_.resize(n);
    for (std::size_t k = 0; k < n; ++k) targets_[ids[k]] = sel0.destinations[k];
    for (std::size_t k : sel0.anchors) anchors_.push_back(ids[k]);
    std::sort(anchors_.begin(), anchors_.end());
    remaining_ = 0;
    for (std::size_t id = 0; id < n; ++id) remaining_ += distance(space, pos_[id], targets_[id]);
  } else {
    skip("cost-monotonicity", "no assignment at the initial configuration");
    skip("anchor-invariance", "no assignment at the initial configuration");
  }
  if (!space.is_circle()) skip("anchor-invariance", "segment targets are fixed by the space");

  struct Pending {
    Scalar destination;
    Direction direction;
    Scalar remaining;
  };
  std::vector<std::optional<Pending>> pending(n);
  Scalar travelled = 0;
  std::optional<std::int64_t> converged;
  std::optional<std::size_t> final_event;
  std::int64_t tick = -1;
  bool moved = false;
  std::size_t checkpoint = kNoEvent;

  auto in_range = [&](std::size_t robot, std::size_t event) {
    if (robot < n) return true;
    fail("replay", trace_.events[event].tick, "robot id out of range", event);
    return false;
  };

  for (std::size_t i = 0; i < trace_.events.size(); ++i) {
    const Event& e = trace_.events[i];
    const bool ticked = e.kind != Event::Kind::kRefused && e.kind != Event::Kind::kFinal;
    if (ticked && e.tick != tick && e.kind != Event::Kind::kConverged && e.kind != Event::Kind::kBudgetExceeded) {
      if (e.tick < tick) fail("replay", e.tick, "events out of tick order", i);
      if (tick >= 0) close_tick(tick, moved, checkpoint);
      tick = e.tick;
      moved = false;
      checkpoint = kNoEvent;
    }
    switch (e.kind) {
      case Event::Kind::kActivated: {
        if (!in_range(e.robot, i)) break;
        const int k = scenario_.policy.fairness_bound;
        if (e.tick - last_activation_[e.robot] > k) {
          fail("fairness", last_activation_[e.robot] + k,
               "robot " + std::to_string(e.robot) + " not activated within " + std::to_string(k) + " ticks", i);
        }
        last_activation_[e.robot] = e.tick;
        break;
      }
      case Event::Kind::kSnapshot:
        if (!collided_ && e.positions != pos_) fail("replay", e.tick, "snapshot disagrees with replayed positions", i);
        break;
      case Event::Kind::kDecided:
        if (!in_range(e.robot, i)) break;
        if (e.decision.is_move()) {
          try {
            pending[e.robot] = Pending{e.decision.destination, e.decision.direction,
                                       travel_distance(pos_[e.robot], e.decision.destination, e.decision.direction,
                                                       space)};
          } catch (const Error& err) {
            fail("replay", e.tick, err.what(), i);
          }
        } else {
          pending[e.robot].reset();
        }
        break;
      case Event::Kind::kDisplaced: {
        if (collided_ || !in_range(e.robot, i)) break;
        moved = true;
        if (pos_[e.robot] != e.from) {
          fail("replay", e.tick, "displacement starts at " + to_string(e.from) + " but robot is at " +
                                     to_string(pos_[e.robot]), i);
        }
        Scalar to;
        try {
          to = advance(e.from, e.direction, e.amount, space);
        } catch (const Error& err) {
          fail("replay", e.tick, err.what(), i);
          break;
        }
        if (to != e.to || !(e.amount > 0)) {
          fail("replay", e.tick, "displacement endpoint inconsistent with its amount", i);
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (j != e.robot && on_path(e.from, e.to, e.direction, pos_[j], space)) {
            fail("collision-freedom", e.tick,
                 "CollisionDetected at tick " + std::to_string(e.tick) + ": robot " + std::to_string(e.robot) +
                     " reaches robot " + std::to_string(j) + " at " + to_string(pos_[j]),
                 i);
            collided_ = true;
          }
        }
        auto& p = pending[e.robot];
        if (!p || p->direction != e.direction) {
          fail("replay", e.tick, "displacement without a matching move decision", i);
        } else {
          const Scalar floor = std::min(scenario_.policy.delta, p->remaining);
          if (e.amount > p->remaining || e.amount < floor) {
            fail("delta-floor", e.tick,
                 "amount " + to_string(e.amount) + " outside [" + to_string(floor) + ", " + to_string(p->remaining) +
                     "]",
                 i);
          }
          p->remaining -= e.amount;
          if (p->remaining <= 0) p.reset();
        }
        travelled += e.amount;
        pos_[e.robot] = e.to;
        break;
      }
      case Event::Kind::kCollision:
        fail("collision-freedom", e.tick, "CollisionDetected at tick " + std::to_string(e.tick), i);
        collided_ = true;
        break;
      case Event::Kind::kCheckpoint:
        checkpoint = i;
        break;
      case Event::Kind::kConverged:
        converged = e.tick;
        break;
      case Event::Kind::kBudgetExceeded:
      case Event::Kind::kRefused:
        break;
      case Event::Kind::kFinal:
        final_event = i;
        break;
    }
  }
  if (tick >= 0) close_tick(tick, moved, checkpoint);

  std::int64_t ticks = tick + 1;
  if (final_event) {
    const Event& fin = trace_.events[*final_event];
    ticks = fin.tick;
    if (fin.positions != pos_ && !collided_) fail("replay", fin.tick, "final positions differ from replay", *final_event);
  } else {
    fail("replay", ticks, "trace has no final line");
  }
  check_fairness_tail(ticks);

  const Configuration last(space, collided_ ? scenario_.positions : pos_);
  if (!converged) {
    fail("final-regularity", ticks, "run did not converge");
  } else if (!is_final(last)) {
    fail("final-regularity", *converged,
         space.is_circle() ? "final configuration is not a regular n-gon" : "final configuration is not the target set");
  }
  const Scalar optimum = optimal_cost(initial);
  if (travelled != optimum) {
    fail("distance-optimality", ticks, "travelled " + to_string(travelled) + ", optimum " + to_string(optimum));
  } else {
    check("distance-optimality").detail = "travelled " + to_string(travelled);
  }
  return report_;
}

}  // namespace

VerificationReport verify_trace(const TraceFile& trace, const Scenario& scenario) {
  return Checker(trace, scenario).run();
}

std::vector<std::pair<std::int64_t, std::vector<Scalar>>> position_table(const std::vector<Scalar>& initial,
                                                                         const Trace& trace) {
  std::vector<std::pair<std::int64_t, std::vector<Scalar>>> out;
  out.emplace_back(-1, initial);
  std::vector<Scalar> pos = initial;
  for (const auto& e : trace) {
    if (e.kind != Event::Kind::kDisplaced) continue;
    pos[e.robot] = e.to;
    if (out.back().first == e.tick) {
      out.back().second = pos;
    } else {
      out.emplace_back(e.tick, pos);
    }
  }
  return out;
}

}  // namespace minsum
