#include "minsum/harness.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "minsum/error.hpp"

namespace minsum {

ClassifyReport classify_report(const Configuration& config) {
  ClassifyReport r;
  r.costs = extremal_set(config);
  r.symmetry = analyze_symmetry(config, r.costs.extremal);
  r.assignments = distinct_assignments(config, r.costs);
  return r;
}

TargetsReport targets_report(const Scenario& scenario) {
  const Configuration config = scenario.configuration();
  const Space& space = config.space();
  TargetsReport r;
  r.selection = select_assignment(config, scenario.algorithm);
  r.optimum = optimal_cost(config);
  r.total = 0;
  if (r.selection.destinations.empty()) return r;
  for (std::size_t id = 0; id < scenario.positions.size(); ++id) {
    const std::size_t k = config.find(scenario.positions[id]);
    TargetRow row;
    row.robot = id;
    row.position = scenario.positions[id];
    row.target = r.selection.destinations[k];
    if (space.is_circle()) {
      row.distance = arc_distance(row.position, row.target, space);
      const Scalar cw = directed_arc(row.position, row.target, Direction::kCw, space);
      const Scalar ccw = row.distance == 0 ? Scalar(0) : Scalar(space.circumference() - cw);
      if (cw < ccw) row.direction = Direction::kCw;
      if (ccw < cw) row.direction = Direction::kCcw;
    } else {
      row.distance = segment_distance(row.position, row.target);
      if (row.target > row.position) row.direction = Direction::kCw;
      if (row.target < row.position) row.direction = Direction::kCcw;
    }
    r.total += row.distance;
    r.rows.push_back(std::move(row));
  }
  return r;
}

OracleReport oracle_report(const Configuration& config, std::size_t grid) {
  OracleReport r;
  if (config.space().is_circle()) {
    r.engine = extremal_set(config).optimum;
    const auto brute = brute_force_circle_optimum(config, grid);
    r.brute_force = brute.cost;
    r.optimal_matchings = brute.optimal.size();
    for (const auto& m : brute.optimal) {
      bool fixed = false;
      for (std::size_t i = 0; i < config.size() && !fixed; ++i) fixed = m.targets[i] == config[i];
      if (!fixed) r.fixed_point_in_every_optimum = false;
    }
  } else {
    r.engine = assignment_cost(config, line_targets(config));
    const auto brute = brute_force_line_optimum(config);
    r.brute_force = brute.cost;
    r.optimal_matchings = brute.optimal.size();
  }
  r.agree = r.engine == r.brute_force;
  return r;
}

Configuration random_configuration(const Space& space, std::size_t n, std::uint64_t seed, std::uint64_t denominator) {
  const std::uint64_t slots = space.is_circle() ? denominator : denominator + 1;
  if (n == 0 || n > slots) throw Error(ErrorCode::kTooLarge, "not enough grid points for the requested robots");
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> picked;
  while (picked.size() < n) picked.insert(rng() % slots);
  std::vector<Scalar> positions;
  const Scalar den(static_cast<long>(denominator));
  for (std::uint64_t k : picked) {
    positions.push_back(space.a() + space.length() * Scalar(static_cast<long>(k)) / den);
  }
  return Configuration(space, std::move(positions));
}

DemoReport demo_impossibility(const Scenario& scenario, std::int64_t budget) {
  const Configuration initial = scenario.configuration();
  if (!initial.space().is_circle()) throw Error(ErrorCode::kInvalidSpace, "the demonstration needs a circle");
  DemoReport report;
  report.initial_class = classify(initial, extremal_set(initial).extremal);
  report.axes = find_lines_of_symmetry(initial);

  SchedulerPolicy policy = scenario.policy;
  policy.kind = SchedulerKind::kSsync;
  policy.adversary = Adversary::kSymmetryPreserving;
  policy.rigid = false;

  for (Algorithm alg : {Algorithm::kDispatch, Algorithm::kAsymUnique, Algorithm::kSymUnique,
                        Algorithm::kAsymMultiple, Algorithm::kRotSym}) {
    DemoRow row;
    row.algorithm = alg;
    Simulation sim(initial.space(), scenario.positions, alg, policy);
    while (sim.tick() < budget) {
      const auto events = sim.step();
      row.ticks = sim.tick();
      if (sim.collided()) {
        row.collision = true;
        break;
      }
      const auto moved = std::count_if(events.begin(), events.end(),
                                       [](const Event& e) { return e.kind == Event::Kind::kDisplaced; });
      if (moved == 0) continue;
      row.displacements += static_cast<std::size_t>(moved);
      const Configuration config = sim.configuration();
      if (row.axes_retained) {
        for (const auto& axis : report.axes) {
          if (!is_symmetric_about(config, axis)) {
            row.axes_retained = false;
            row.axes_lost_at = sim.tick() - 1;
            break;
          }
        }
      }
      if (sim.all_idle() && is_regular_polygon(config)) {
        row.reached_regular = true;
        break;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace minsum
