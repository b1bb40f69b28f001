#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minsum/scenario.hpp"

namespace minsum {

// Symmetry and cost summary of a circle configuration, robot indices in
// sorted order.
struct ClassifyReport {
  SymmetryReport symmetry;
  CostReport costs;
  std::vector<std::vector<std::size_t>> assignments;
};

ClassifyReport classify_report(const Configuration& config);

struct TargetRow {
  std::size_t robot = 0;  // robot id (scenario order)
  Scalar position;
  Scalar target;
  Scalar distance;
  // Shorter way round; nullopt when already there or exactly opposite.
  std::optional<Direction> direction;
};

struct TargetsReport {
  Selection selection;
  std::vector<TargetRow> rows;
  Scalar total;
  Scalar optimum;
};

// Targets chosen by the scenario's algorithm for its initial configuration.
TargetsReport targets_report(const Scenario& scenario);

struct OracleReport {
  Scalar engine;  // extremal_set optimum or order-preserving line cost
  Scalar brute_force;
  bool agree = false;
  // Every brute-force optimum leaves at least one robot in place (circle).
  bool fixed_point_in_every_optimum = true;
  std::size_t optimal_matchings = 0;
};

OracleReport oracle_report(const Configuration& config, std::size_t grid = 4);

// Random configuration with n distinct points of the form k/denominator
// scaled to the space.
Configuration random_configuration(const Space& space, std::size_t n, std::uint64_t seed,
                                   std::uint64_t denominator = 60);

struct DemoRow {
  Algorithm algorithm = Algorithm::kDispatch;
  std::int64_t ticks = 0;
  std::size_t displacements = 0;
  bool axes_retained = true;
  std::optional<std::int64_t> axes_lost_at;
  bool reached_regular = false;
  bool collision = false;
};

struct DemoReport {
  ConfigClass initial_class = ConfigClass::kI1;
  std::vector<Axis> axes;
  std::vector<DemoRow> rows;
};

// Runs every circle algorithm under the symmetry-preserving adversary for
// `budget` ticks and records whether the initial lines of symmetry survive
// each tick and whether a regular n-gon is ever reached.
DemoReport demo_impossibility(const Scenario& scenario, std::int64_t budget);

}  // namespace minsum
