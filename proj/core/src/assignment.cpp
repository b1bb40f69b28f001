#include "minsum/assignment.hpp"

#include <algorithm>
#include <numeric>

#include "minsum/error.hpp"

namespace minsum {

std::vector<Scalar> TargetSet::destinations() const {
  std::vector<Scalar> out;
  out.reserve(matching.size());
  for (std::size_t i = 0; i < matching.size(); ++i) out.push_back(target_of(i));
  return out;
}

TargetSet line_targets(const Scalar& a, const Scalar& b, std::size_t n) {
  if (!(a < b)) throw Error(ErrorCode::kDegenerateSegment, "segment requires a < b");
  TargetSet out;
  const Scalar len = b - a;
  const Scalar denom = 2 * static_cast<long>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.points.push_back(a + Scalar(2 * static_cast<long>(i) - 1) * len / denom);
    out.matching.push_back(i - 1);
  }
  return out;
}

TargetSet line_targets(const Configuration& config) {
  if (!config.space().is_segment()) throw Error(ErrorCode::kInvalidSpace, "line targets need a segment");
  return line_targets(config.space().a(), config.space().b(), config.size());
}

TargetSet ngon_targets(const Configuration& config, std::size_t anchor) {
  if (!config.space().is_circle()) throw Error(ErrorCode::kInvalidSpace, "n-gon targets need a circle");
  const std::size_t n = config.size();
  if (anchor >= n) throw Error(ErrorCode::kIndexOutOfRange, "anchor index out of range");
  const Scalar& c = config.space().circumference();
  const Scalar step = c / static_cast<long>(n);
  TargetSet out;
  out.anchor = anchor;
  out.matching.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.points.push_back(wrap(Scalar(config[anchor] + static_cast<long>(k) * step), c));
    out.matching[(anchor + k) % n] = k;
  }
  return out;
}

Scalar assignment_cost(const Configuration& config, const TargetSet& targets) {
  Scalar total = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    total += config.space().is_circle() ? arc_distance(config[i], targets.target_of(i), config.space())
                                        : segment_distance(config[i], targets.target_of(i));
  }
  return total;
}

Scalar candidate_cost(const Configuration& config, std::size_t anchor) {
  return assignment_cost(config, ngon_targets(config, anchor));
}

CostReport extremal_set(const Configuration& config) {
  if (!config.space().is_circle()) throw Error(ErrorCode::kInvalidSpace, "extremal set needs a circle");
  CostReport report;
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) report.per_candidate.push_back(candidate_cost(config, i));
  report.optimum = *std::min_element(report.per_candidate.begin(), report.per_candidate.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (report.per_candidate[i] == report.optimum) report.extremal.push_back(i);
  }
  return report;
}

std::vector<std::vector<std::size_t>> distinct_assignments(const Configuration& config,
                                                           const CostReport& report) {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<Scalar>> keys;
  for (std::size_t e : report.extremal) {
    auto dest = ngon_targets(config, e).destinations();
    const auto it = std::find(keys.begin(), keys.end(), dest);
    if (it == keys.end()) {
      keys.push_back(std::move(dest));
      groups.push_back({e});
    } else {
      groups[static_cast<std::size_t>(it - keys.begin())].push_back(e);
    }
  }
  return groups;
}

namespace {

// Enumerates all bijections robots -> columns of `cost`, recording minima.
void enumerate(const std::vector<std::vector<Scalar>>& cost, const std::vector<Scalar>& columns,
               const Scalar& offset, BruteForceResult& result, bool& first) {
  const std::size_t n = cost.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total;
  do {
    total = 0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i][perm[i]];
    if (first || total < result.cost) {
      first = false;
      result.cost = total;
      result.optimal.clear();
    } else if (total != result.cost) {
      continue;
    }
    Matching m{offset, {}, total};
    for (std::size_t i = 0; i < n; ++i) m.targets.push_back(columns[perm[i]]);
    result.optimal.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void require_small(const Configuration& config) {
  if (config.size() > kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge,
                "brute force limited to n <= 7, got n=" + std::to_string(config.size()));
  }
}

}  // namespace

BruteForceResult brute_force_circle_optimum(const Configuration& config, std::size_t grid) {
  if (!config.space().is_circle()) throw Error(ErrorCode::kInvalidSpace, "circle oracle needs a circle");
  require_small(config);
  const std::size_t n = config.size();
  const Scalar& c = config.space().circumference();
  const Scalar step = c / static_cast<long>(n);

  std::vector<Scalar> offsets;
  for (std::size_t k = 0; k < grid; ++k) offsets.push_back(step * static_cast<long>(k) / static_cast<long>(grid));
  for (const auto& p : config.positions()) offsets.push_back(wrap(p, step));
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());

  BruteForceResult result;
  bool first = true;
  std::vector<std::vector<Scalar>> cost(n, std::vector<Scalar>(n));
  for (const auto& offset : offsets) {
    std::vector<Scalar> vertices;
    for (std::size_t j = 0; j < n; ++j) vertices.push_back(offset + static_cast<long>(j) * step);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cost[i][j] = arc_distance(config[i], vertices[j], config.space());
    }
    enumerate(cost, vertices, offset, result, first);
  }
  result.best = result.optimal.front();
  return result;
}

BruteForceResult brute_force_line_optimum(const Configuration& config) {
  require_small(config);
  const TargetSet targets = line_targets(config);
  const std::size_t n = config.size();
  std::vector<std::vector<Scalar>> cost(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = segment_distance(config[i], targets.points[j]);
  }
  BruteForceResult result;
  bool first = true;
  enumerate(cost, targets.points, Scalar(0), result, first);
  result.best = result.optimal.front();
  return result;
}

}  // namespace minsum
