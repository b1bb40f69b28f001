#pragma once

#include <span>
#include <string>

#include "minsum/scalar.hpp"

namespace minsum {

enum class SpaceKind { kSegment, kCircle };

// Clockwise is the direction of increasing arc coordinate in the global
// frame. On a segment, kCw means increasing coordinate.
enum class Direction { kCw, kCcw };

Direction opposite(Direction dir);
const char* to_string(Direction dir);
const char* to_string(SpaceKind kind);

// A finite segment [a, b] (a < b) or a circle given by its circumference.
class Space {
 public:
  static Space segment(Scalar a, Scalar b);
  static Space circle(Scalar circumference);

  SpaceKind kind() const { return kind_; }
  bool is_circle() const { return kind_ == SpaceKind::kCircle; }
  bool is_segment() const { return kind_ == SpaceKind::kSegment; }

  // Segment endpoints. For a circle a() = 0 and b() = circumference().
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& circumference() const;
  // b - a for a segment, the circumference for a circle.
  Scalar length() const { return b_ - a_; }

  bool contains(const Scalar& coord) const;
  // Circle: reduce any coordinate into [0, C). Segment: identity.
  Scalar normalize(const Scalar& coord) const;

  bool operator==(const Space& other) const {
    return kind_ == other.kind_ && a_ == other.a_ && b_ == other.b_;
  }

  std::string describe() const;

 private:
  Space(SpaceKind kind, Scalar a, Scalar b) : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}

  SpaceKind kind_;
  Scalar a_;
  Scalar b_;
};

// x mod m into [0, m), m > 0.
Scalar wrap(const Scalar& x, const Scalar& m);

// Shorter arc between two circle points; in [0, C/2].
Scalar arc_distance(const Scalar& x, const Scalar& y, const Space& space);

// Arc length travelling from x to y strictly in `dir`; in [0, C).
Scalar directed_arc(const Scalar& x, const Scalar& y, Direction dir, const Space& space);

Scalar segment_distance(const Scalar& x, const Scalar& y);

// Distance from x to y travelling in `dir` on either kind of space. On a
// segment the direction must point at y (or x == y); otherwise InvalidPosition.
Scalar travel_distance(const Scalar& x, const Scalar& y, Direction dir, const Space& space);

// Position reached by moving `amount` from x in `dir`.
Scalar advance(const Scalar& x, Direction dir, const Scalar& amount, const Space& space);

// True when the path from `from` (exclusive) to `to` (inclusive) contains none
// of `others`. On a circle the path follows `dir`; on a segment it is the
// interval between the two points and `dir` is ignored.
bool path_is_free(const Scalar& from, const Scalar& to, Direction dir,
                  std::span<const Scalar> others, const Space& space);

// Whether p lies on the half-open path (from, to] described above.
bool on_path(const Scalar& from, const Scalar& to, Direction dir, const Scalar& p,
             const Space& space);

}  // namespace minsum
