#include "minsum/geometry.hpp"

#include "minsum/error.hpp"

namespace minsum {

Direction opposite(Direction dir) { return dir == Direction::kCw ? Direction::kCcw : Direction::kCw; }

const char* to_string(Direction dir) { return dir == Direction::kCw ? "cw" : "ccw"; }

const char* to_string(SpaceKind kind) { return kind == SpaceKind::kCircle ? "circle" : "segment"; }

Space Space::segment(Scalar a, Scalar b) {
  if (!(a < b)) {
    throw Error(ErrorCode::kDegenerateSegment,
                "segment requires a < b, got [" + to_string(a) + ", " + to_string(b) + "]");
  }
  return Space(SpaceKind::kSegment, std::move(a), std::move(b));
}

Space Space::circle(Scalar circumference) {
  if (!(circumference > 0)) {
    throw Error(ErrorCode::kInvalidSpace, "circumference must be positive, got " + to_string(circumference));
  }
  return Space(SpaceKind::kCircle, Scalar(0), std::move(circumference));
}

const Scalar& Space::circumference() const {
  if (kind_ != SpaceKind::kCircle) throw Error(ErrorCode::kInvalidSpace, "segment has no circumference");
  return b_;
}

bool Space::contains(const Scalar& coord) const {
  if (kind_ == SpaceKind::kCircle) return coord >= 0 && coord < b_;
  return coord >= a_ && coord <= b_;
}

Scalar Space::normalize(const Scalar& coord) const {
  return kind_ == SpaceKind::kCircle ? wrap(coord, b_) : coord;
}

std::string Space::describe() const {
  if (kind_ == SpaceKind::kCircle) return "circle C=" + to_string(b_);
  return "segment [" + to_string(a_) + ", " + to_string(b_) + "]";
}

Scalar wrap(const Scalar& x, const Scalar& m) {
  if (x >= 0 && x < m) return x;
  Scalar q = x / m;
  Scalar r = x - floor(q) * m;
  return r;
}

namespace {

void require_circle(const Space& space) {
  if (!space.is_circle()) throw Error(ErrorCode::kInvalidSpace, "operation requires a circle");
}

}  // namespace

Scalar directed_arc(const Scalar& x, const Scalar& y, Direction dir, const Space& space) {
  require_circle(space);
  const Scalar& c = space.circumference();
  Scalar d = dir == Direction::kCw ? Scalar(y - x) : Scalar(x - y);
  if (d < 0) d += c;
  if (d >= c || d < 0) d = wrap(d, c);
  return d;
}

Scalar arc_distance(const Scalar& x, const Scalar& y, const Space& space) {
  Scalar cw = directed_arc(x, y, Direction::kCw, space);
  Scalar ccw = cw == 0 ? Scalar(0) : Scalar(space.circumference() - cw);
  return cw < ccw ? cw : ccw;
}

Scalar segment_distance(const Scalar& x, const Scalar& y) { return abs(Scalar(x - y)); }

Scalar travel_distance(const Scalar& x, const Scalar& y, Direction dir, const Space& space) {
  if (space.is_circle()) return directed_arc(x, y, dir, space);
  Scalar d = dir == Direction::kCw ? Scalar(y - x) : Scalar(x - y);
  if (d < 0) throw Error(ErrorCode::kInvalidPosition, "direction does not point at the destination");
  return d;
}

Scalar advance(const Scalar& x, Direction dir, const Scalar& amount, const Space& space) {
  Scalar moved = dir == Direction::kCw ? Scalar(x + amount) : Scalar(x - amount);
  if (space.is_circle()) return wrap(moved, space.circumference());
  if (!space.contains(moved)) throw Error(ErrorCode::kInvalidPosition, "displacement leaves the segment");
  return moved;
}

bool on_path(const Scalar& from, const Scalar& to, Direction dir, const Scalar& p, const Space& space) {
  if (space.is_circle()) {
    const Scalar reach = directed_arc(from, to, dir, space);
    const Scalar at = directed_arc(from, p, dir, space);
    return at > 0 && at <= reach;
  }
  if (from < to) return p > from && p <= to;
  if (to < from) return p < from && p >= to;
  return false;
}

bool path_is_free(const Scalar& from, const Scalar& to, Direction dir, std::span<const Scalar> others,
                  const Space& space) {
  for (const auto& p : others) {
    if (on_path(from, to, dir, p, space)) return false;
  }
  return true;
}

}  // namespace minsum
