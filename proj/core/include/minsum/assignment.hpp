#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "minsum/configuration.hpp"

namespace minsum {

// Uniform-coverage destinations plus the robot -> target bijection.
struct TargetSet {
  // Target points in order: left to right on a segment, clockwise from the
  // anchor on a circle.
  std::vector<Scalar> points;
  // matching[i] = index into points for robot i (robot order as in the
  // configuration).
  std::vector<std::size_t> matching;
  // Circle assignments: the robot whose own position is a vertex.
  std::optional<std::size_t> anchor;

  const Scalar& target_of(std::size_t robot) const { return points[matching[robot]]; }
  // Per-robot destinations, indexed like the configuration.
  std::vector<Scalar> destinations() const;
};

struct CostReport {
  // per_candidate[i] = total cost when robot i anchors the n-gon.
  std::vector<Scalar> per_candidate;
  Scalar optimum;
  // Robots achieving the optimum, ascending.
  std::vector<std::size_t> extremal;
};

// Evenly spaced points a + (2i-1)(b-a)/(2n), i = 1..n, with the
// order-preserving matching. Throws DegenerateSegment if a >= b.
TargetSet line_targets(const Scalar& a, const Scalar& b, std::size_t n);
TargetSet line_targets(const Configuration& config);

// Regular n-gon through the anchor; the robot k steps clockwise from the
// anchor goes to anchor + k*C/n.
TargetSet ngon_targets(const Configuration& config, std::size_t anchor);

// Total travel under a target set: arc distances on a circle, absolute
// differences on a segment.
Scalar assignment_cost(const Configuration& config, const TargetSet& targets);

Scalar candidate_cost(const Configuration& config, std::size_t anchor);

CostReport extremal_set(const Configuration& config);

// Groups extremal anchors that induce the same destination map; each group
// lists anchors ascending, groups ordered by their first anchor.
std::vector<std::vector<std::size_t>> distinct_assignments(const Configuration& config,
                                                           const CostReport& report);

// Brute-force oracles for tests and the CLI.
struct Matching {
  Scalar offset;                // rotation of the n-gon, in [0, C/n)
  std::vector<Scalar> targets;  // targets[i] for robot i
  Scalar cost;
};

struct BruteForceResult {
  Scalar cost;
  Matching best;
  // Every (offset, bijection) pair achieving the minimum.
  std::vector<Matching> optimal;
};

inline constexpr std::size_t kBruteForceLimit = 7;

// Minimum total arc distance over all n! bijections onto regular n-gons
// rotated by offsets k*(C/n)/grid (k < grid) and by every robot coordinate
// mod C/n. Throws TooLarge for n > 7.
BruteForceResult brute_force_circle_optimum(const Configuration& config, std::size_t grid);

// Minimum over all n! bijections onto line_targets. Throws TooLarge for n > 7.
BruteForceResult brute_force_line_optimum(const Configuration& config);

}  // namespace minsum
