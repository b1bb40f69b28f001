#include "minsum/configuration.hpp"

#include <algorithm>

#include "minsum/error.hpp"

namespace minsum {

Configuration::Configuration(Space space, std::vector<Scalar> positions)
    : space_(std::move(space)), positions_(std::move(positions)) {
  if (positions_.empty()) throw Error(ErrorCode::kInvalidPosition, "configuration needs at least one robot");
  for (const auto& p : positions_) {
    if (!space_.contains(p)) {
      throw Error(ErrorCode::kInvalidPosition, "position " + to_string(p) + " outside " + space_.describe());
    }
  }
  std::sort(positions_.begin(), positions_.end());
  const auto dup = std::adjacent_find(positions_.begin(), positions_.end());
  if (dup != positions_.end()) {
    throw Error(ErrorCode::kDuplicatePosition, "two robots at " + to_string(*dup));
  }
}

std::size_t Configuration::find(const Scalar& coord) const {
  const auto it = std::lower_bound(positions_.begin(), positions_.end(), coord);
  if (it != positions_.end() && *it == coord) return static_cast<std::size_t>(it - positions_.begin());
  return size();
}

Scalar Configuration::gap_after(std::size_t i) const {
  const std::size_t n = size();
  const std::size_t j = (i + 1) % n;
  Scalar g = positions_[j] - positions_[i];
  if (g <= 0) g += space_.circumference();
  return g;
}

namespace {

void require_circle(const Configuration& config) {
  if (!config.space().is_circle()) throw Error(ErrorCode::kInvalidSpace, "operation requires a circle");
}

void require_index(const Configuration& config, std::size_t i) {
  if (i >= config.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "robot index " + std::to_string(i) + " out of range (n=" + std::to_string(config.size()) + ")");
  }
}

}  // namespace

View clockwise_view(const Configuration& config, std::size_t i) {
  require_circle(config);
  require_index(config, i);
  const std::size_t n = config.size();
  const Scalar& c = config.space().circumference();
  View view(n);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar d = config[(i + k) % n] - config[i];
    if (d < 0) d += c;
    view[k] = std::move(d);
  }
  return view;
}

View counterclockwise_view(const Configuration& config, std::size_t i) {
  require_circle(config);
  require_index(config, i);
  const std::size_t n = config.size();
  const Scalar& c = config.space().circumference();
  View view(n);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar d = config[i] - config[(i + n - k) % n];
    if (d < 0) d += c;
    view[k] = std::move(d);
  }
  return view;
}

View min_view(const Configuration& config, std::size_t i) {
  View cw = clockwise_view(config, i);
  View ccw = counterclockwise_view(config, i);
  return ccw < cw ? ccw : cw;
}

std::vector<View> min_views(const Configuration& config) {
  std::vector<View> out;
  out.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) out.push_back(min_view(config, i));
  return out;
}

Axis axis_through(const Scalar& foot, const Space& space) {
  const Scalar half = space.circumference() / 2;
  Scalar first = wrap(foot, half);
  Scalar second = first + half;
  return Axis{std::move(first), std::move(second)};
}

Scalar reflect(const Scalar& coord, const Axis& axis, const Space& space) {
  return wrap(Scalar(2 * axis.first - coord), space.circumference());
}

bool on_axis(const Scalar& coord, const Axis& axis) { return coord == axis.first || coord == axis.second; }

bool is_symmetric_about(const Configuration& config, const Axis& axis) {
  for (const auto& p : config.positions()) {
    if (!config.contains(reflect(p, axis, config.space()))) return false;
  }
  return true;
}

std::vector<Axis> find_lines_of_symmetry(const Configuration& config) {
  require_circle(config);
  std::vector<Axis> axes;
  const std::size_t n = config.size();
  if (n == 0) return axes;
  auto consider = [&](const Scalar& foot) {
    Axis axis = axis_through(foot, config.space());
    if (std::find(axes.begin(), axes.end(), axis) != axes.end()) return;
    if (is_symmetric_about(config, axis)) axes.push_back(std::move(axis));
  };
  for (std::size_t i = 0; i < n; ++i) {
    consider(config[i]);
    consider(Scalar(config[i] + config.gap_after(i) / 2));
  }
  std::sort(axes.begin(), axes.end(), [](const Axis& l, const Axis& r) { return l.first < r.first; });
  return axes;
}

bool is_invariant_under_rotation(const Configuration& config, const Scalar& shift) {
  const Scalar& c = config.space().circumference();
  for (const auto& p : config.positions()) {
    if (!config.contains(wrap(Scalar(p + shift), c))) return false;
  }
  return true;
}

int rotational_order(const Configuration& config) {
  require_circle(config);
  const std::size_t n = config.size();
  if (n <= 1) return 1;
  const Scalar& c = config.space().circumference();
  for (std::size_t w = n; w >= 2; --w) {
    if (n % w != 0) continue;
    const Scalar shift = c / static_cast<long>(w);
    // Sorted order is preserved by rotation: robot i lands on robot i + n/w.
    const std::size_t step = n / w;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = config[(i + step) % n] == wrap(Scalar(config[i] + shift), c);
    }
    if (ok) return static_cast<int>(w);
  }
  return 1;
}

std::vector<std::vector<std::size_t>> rotational_classes(const Configuration& config) {
  const int w = rotational_order(config);
  if (w < 2) throw Error(ErrorCode::kCalledOnAsymmetric, "configuration has no rotational symmetry");
  const std::size_t n = config.size();
  const std::size_t step = n / static_cast<std::size_t>(w);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < step; ++start) {
    std::vector<std::size_t> orbit;
    for (int k = 0; k < w; ++k) orbit.push_back(start + static_cast<std::size_t>(k) * step);
    classes.push_back(std::move(orbit));
  }
  return classes;
}

const char* to_string(ConfigClass cls) {
  switch (cls) {
    case ConfigClass::kI1: return "I1";
    case ConfigClass::kI2: return "I2";
    case ConfigClass::kI3: return "I3";
    case ConfigClass::kI4: return "I4";
    case ConfigClass::kI5: return "I5";
    case ConfigClass::kI6: return "I6";
  }
  return "?";
}

ConfigClass parse_config_class(const std::string& text) {
  for (auto cls : {ConfigClass::kI1, ConfigClass::kI2, ConfigClass::kI3, ConfigClass::kI4, ConfigClass::kI5,
                   ConfigClass::kI6}) {
    if (text == to_string(cls)) return cls;
  }
  throw ParseError(0, "unknown configuration class '" + text + "'");
}

bool is_solvable(ConfigClass cls) { return cls != ConfigClass::kI3 && cls != ConfigClass::kI6; }

namespace {

ConfigClass classify_from(const Configuration& config, const std::vector<Axis>& axes, int w,
                          std::span<const std::size_t> extremal) {
  auto extremal_on = [&](const Axis& axis) {
    return std::any_of(extremal.begin(), extremal.end(),
                       [&](std::size_t i) { return on_axis(config[i], axis); });
  };
  if (axes.empty()) return w >= 2 ? ConfigClass::kI4 : ConfigClass::kI1;
  if (axes.size() == 1) return extremal_on(axes.front()) ? ConfigClass::kI2 : ConfigClass::kI3;
  return std::any_of(axes.begin(), axes.end(), extremal_on) ? ConfigClass::kI5 : ConfigClass::kI6;
}

}  // namespace

ConfigClass classify(const Configuration& config, std::span<const std::size_t> extremal) {
  return analyze_symmetry(config, extremal).cls;
}

SymmetryReport analyze_symmetry(const Configuration& config, std::span<const std::size_t> extremal) {
  SymmetryReport report;
  report.lines_of_symmetry = find_lines_of_symmetry(config);
  report.rotational_order = rotational_order(config);
  report.cls = classify_from(config, report.lines_of_symmetry, report.rotational_order, extremal);
  return report;
}

std::vector<std::size_t> total_order(const Configuration& config) {
  const auto views = min_views(config);
  std::vector<std::size_t> order(config.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return views[l] < views[r]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (views[order[k - 1]] == views[order[k]]) {
      throw Error(ErrorCode::kConfigSymmetric, "robots " + std::to_string(order[k - 1]) + " and " +
                                                   std::to_string(order[k]) + " share a view");
    }
  }
  return order;
}

bool is_regular_polygon(const Configuration& config) {
  require_circle(config);
  const std::size_t n = config.size();
  if (n <= 1) return true;
  const Scalar step = config.space().circumference() / static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (config.gap_after(i) != step) return false;
  }
  return true;
}

std::vector<Scalar> segment_profile(const Configuration& config, Endpoint from) {
  const Space& space = config.space();
  std::vector<Scalar> out;
  out.reserve(config.size());
  if (from == Endpoint::kA) {
    for (const auto& p : config.positions()) out.push_back(p - space.a());
  } else {
    for (auto it = config.positions().rbegin(); it != config.positions().rend(); ++it) {
      out.push_back(space.b() - *it);
    }
  }
  return out;
}

bool is_midpoint_symmetric(const Configuration& config) {
  return segment_profile(config, Endpoint::kA) == segment_profile(config, Endpoint::kB);
}

}  // namespace minsum
