#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "generators.hpp"
#include "minsum/error.hpp"
#include "minsum/geometry.hpp"

namespace minsum {
namespace {

using gen::q;

const Space kUnit = Space::circle(Scalar(1));

TEST(ArcDistance, ShorterArcWraps) { EXPECT_EQ(arc_distance(0, q(3, 4), kUnit), q(1, 4)); }

TEST(ArcDistance, Identity) { EXPECT_EQ(arc_distance(q(2, 5), q(2, 5), kUnit), 0); }

TEST(ArcDistance, AntipodalIsHalf) { EXPECT_EQ(arc_distance(q(1, 10), q(6, 10), kUnit), q(1, 2)); }

TEST(DirectedArc, ClockwiseAndComplement) {
  EXPECT_EQ(directed_arc(0, q(3, 4), Direction::kCw, kUnit), q(3, 4));
  EXPECT_EQ(directed_arc(0, q(3, 4), Direction::kCcw, kUnit), q(1, 4));
  EXPECT_EQ(directed_arc(q(1, 3), q(1, 3), Direction::kCw, kUnit), 0);
}

TEST(SegmentDistance, Examples) {
  EXPECT_EQ(segment_distance(q(1, 5), q(1, 6)), q(1, 30));
  EXPECT_EQ(segment_distance(q(3, 7), q(3, 7)), 0);
  EXPECT_EQ(segment_distance(2, q(11, 2)), q(7, 2));
}

TEST(PathIsFree, SegmentBlockedInside) {
  const Space seg = Space::segment(0, 1);
  const std::vector<Scalar> others = {q(3, 20), q(1, 5)};
  EXPECT_FALSE(path_is_free(q(1, 10), q(1, 6), Direction::kCw, others, seg));
}

TEST(PathIsFree, SegmentClear) {
  const Space seg = Space::segment(0, 1);
  const std::vector<Scalar> others = {q(1, 5), q(9, 10)};
  EXPECT_TRUE(path_is_free(q(2, 5), q(1, 2), Direction::kCw, others, seg));
}

TEST(PathIsFree, CircleClockwiseClear) {
  const std::vector<Scalar> others = {q(1, 2), q(3, 4)};
  EXPECT_TRUE(path_is_free(0, q(1, 3), Direction::kCw, others, kUnit));
  EXPECT_FALSE(path_is_free(0, q(1, 3), Direction::kCcw, others, kUnit));
}

TEST(PathIsFree, OccupiedDestinationBlocks) {
  const std::vector<Scalar> others = {q(1, 3)};
  EXPECT_FALSE(path_is_free(0, q(1, 3), Direction::kCw, others, kUnit));
}

TEST(Space, RejectsDegenerate) {
  EXPECT_THROW(Space::segment(1, 1), Error);
  EXPECT_THROW(Space::circle(0), Error);
}

TEST(Space, NormalizeWrapsIntoRange) {
  const Space c = Space::circle(q(3, 2));
  EXPECT_EQ(c.normalize(q(-1, 2)), 1);
  EXPECT_EQ(c.normalize(q(7, 2)), q(1, 2));
}

TEST(Advance, WrapsAroundTheCircle) {
  EXPECT_EQ(advance(q(9, 10), Direction::kCw, q(1, 5), kUnit), q(1, 10));
  EXPECT_EQ(advance(q(1, 10), Direction::kCcw, q(1, 5), kUnit), q(9, 10));
}

// Random rationals k/120 with a brute-force arc oracle on integer numerators.
class GeometryProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  Scalar draw() { return q(static_cast<long>(rng() % 120), 120); }
};

long oracle_arc(long x, long y) {
  const long d = ((y - x) % 120 + 120) % 120;
  return std::min(d, 120 - d);
}

TEST_F(GeometryProperty, ArcDistanceMatchesIntegerOracle) {
  for (int k = 0; k < 500; ++k) {
    const long x = static_cast<long>(rng() % 120);
    const long y = static_cast<long>(rng() % 120);
    EXPECT_EQ(arc_distance(q(x, 120), q(y, 120), kUnit), q(oracle_arc(x, y), 120));
  }
}

TEST_F(GeometryProperty, MetricAxioms) {
  for (int k = 0; k < 500; ++k) {
    const Scalar x = draw(), y = draw(), z = draw();
    EXPECT_EQ(arc_distance(x, y, kUnit), arc_distance(y, x, kUnit));
    EXPECT_LE(arc_distance(x, y, kUnit), q(1, 2));
    EXPECT_LE(arc_distance(x, z, kUnit), arc_distance(x, y, kUnit) + arc_distance(y, z, kUnit));
  }
}

TEST_F(GeometryProperty, DirectedArcsComplement) {
  for (int k = 0; k < 500; ++k) {
    const Scalar x = draw(), y = draw();
    const Scalar sum = directed_arc(x, y, Direction::kCw, kUnit) + directed_arc(y, x, Direction::kCw, kUnit);
    EXPECT_EQ(sum, x == y ? Scalar(0) : Scalar(1));
    EXPECT_EQ(arc_distance(x, y, kUnit), std::min(directed_arc(x, y, Direction::kCw, kUnit),
                                                  directed_arc(x, y, Direction::kCcw, kUnit)));
  }
}

TEST_F(GeometryProperty, PathIsFreeMonotoneInOthers) {
  for (int k = 0; k < 300; ++k) {
    const Scalar from = draw(), to = draw();
    std::vector<Scalar> others;
    for (int j = 0; j < 4; ++j) others.push_back(draw());
    const Direction dir = rng() % 2 ? Direction::kCw : Direction::kCcw;
    bool before = path_is_free(from, to, dir, others, kUnit);
    while (!others.empty()) {
      others.pop_back();
      const bool after = path_is_free(from, to, dir, others, kUnit);
      EXPECT_TRUE(!before || after);
      before = after;
    }
  }
}

}  // namespace
}  // namespace minsum
