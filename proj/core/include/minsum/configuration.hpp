#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "minsum/geometry.hpp"

namespace minsum {

// Robot positions on a space, sorted by coordinate (clockwise from the
// origin on a circle). Positions are pairwise distinct.
class Configuration {
 public:
  // Sorts `positions`. Throws InvalidPosition for coordinates outside the
  // space and DuplicatePosition for repeated points.
  Configuration(Space space, std::vector<Scalar> positions);

  const Space& space() const { return space_; }
  const std::vector<Scalar>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  const Scalar& operator[](std::size_t i) const { return positions_[i]; }

  // Index of the robot at `coord`, or size() when no robot is there.
  std::size_t find(const Scalar& coord) const;
  bool contains(const Scalar& coord) const { return find(coord) != size(); }

  // Clockwise gap from robot i to robot i+1 (circle only).
  Scalar gap_after(std::size_t i) const;

  bool operator==(const Configuration& other) const {
    return space_ == other.space_ && positions_ == other.positions_;
  }

 private:
  Space space_;
  std::vector<Scalar> positions_;
};

// Arc offsets at which successive robots are met when sweeping from one
// robot. Always starts with 0 (the observer itself).
using View = std::vector<Scalar>;

View clockwise_view(const Configuration& config, std::size_t i);
View counterclockwise_view(const Configuration& config, std::size_t i);
// Lexicographically smaller of the two sweeps.
View min_view(const Configuration& config, std::size_t i);
std::vector<View> min_views(const Configuration& config);

// Reflection axis of the circle, stored as its two antipodal feet with
// first < second = first + C/2.
struct Axis {
  Scalar first;
  Scalar second;

  bool operator==(const Axis& other) const { return first == other.first && second == other.second; }
};

Axis axis_through(const Scalar& foot, const Space& space);
Scalar reflect(const Scalar& coord, const Axis& axis, const Space& space);
bool on_axis(const Scalar& coord, const Axis& axis);
bool is_symmetric_about(const Configuration& config, const Axis& axis);

// Every axis mapping the configuration onto itself, sorted by first foot.
std::vector<Axis> find_lines_of_symmetry(const Configuration& config);

// Largest w such that rotating by C/w maps the configuration onto itself.
int rotational_order(const Configuration& config);
bool is_invariant_under_rotation(const Configuration& config, const Scalar& shift);

// Orbits of the rotation by C/w; each holds w robot indices in clockwise
// order. Throws CalledOnAsymmetric when w = 1.
std::vector<std::vector<std::size_t>> rotational_classes(const Configuration& config);

enum class ConfigClass { kI1, kI2, kI3, kI4, kI5, kI6 };

const char* to_string(ConfigClass cls);
ConfigClass parse_config_class(const std::string& text);
bool is_solvable(ConfigClass cls);

struct SymmetryReport {
  std::vector<Axis> lines_of_symmetry;
  int rotational_order = 1;
  ConfigClass cls = ConfigClass::kI1;
};

// Classifies a circle configuration. `extremal` holds robot indices of the
// extremal set (computed by the assignment module).
ConfigClass classify(const Configuration& config, std::span<const std::size_t> extremal);
SymmetryReport analyze_symmetry(const Configuration& config, std::span<const std::size_t> extremal);

// Robot indices sorted by increasing min_view. Throws ConfigSymmetric when
// two robots share a view.
std::vector<std::size_t> total_order(const Configuration& config);

bool is_regular_polygon(const Configuration& config);

// Segment helpers. The profile is the sorted list of robot distances from
// one endpoint; the segment is midpoint-symmetric when both profiles agree.
enum class Endpoint { kA, kB };
std::vector<Scalar> segment_profile(const Configuration& config, Endpoint from);
bool is_midpoint_symmetric(const Configuration& config);

}  // namespace minsum
