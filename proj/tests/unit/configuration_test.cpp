#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "generators.hpp"
#include "minsum/assignment.hpp"
#include "minsum/configuration.hpp"
#include "minsum/error.hpp"

namespace minsum {
namespace {

using gen::q;

const Space kUnit = Space::circle(Scalar(1));

Configuration circle(std::vector<Scalar> positions) { return Configuration(kUnit, std::move(positions)); }

ConfigClass class_of(const Configuration& c) { return classify(c, extremal_set(c).extremal); }

TEST(Configuration, SortsAndRejectsDuplicates) {
  const Configuration c = circle({q(1, 2), 0, q(1, 4)});
  EXPECT_EQ(c.positions(), (std::vector<Scalar>{0, q(1, 4), q(1, 2)}));
  try {
    circle({0, q(1, 4), q(1, 4)});
    FAIL() << "duplicate accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePosition);
  }
  EXPECT_THROW(circle({0, 1}), Error);
}

TEST(Views, ClockwiseSweep) {
  const Configuration c = circle({0, q(1, 4), q(3, 4)});
  EXPECT_EQ(clockwise_view(c, 0), (View{0, q(1, 4), q(3, 4)}));
  EXPECT_EQ(clockwise_view(c, 1), (View{0, q(1, 2), q(3, 4)}));
  EXPECT_EQ(clockwise_view(circle({q(1, 3)}), 0), (View{0}));
}

TEST(Views, CounterclockwiseSweep) {
  EXPECT_EQ(counterclockwise_view(circle({0, q(1, 4), q(3, 4)}), 0), (View{0, q(1, 4), q(3, 4)}));
  EXPECT_EQ(counterclockwise_view(circle({0, q(1, 10), q(3, 10)}), 0), (View{0, q(7, 10), q(9, 10)}));
  EXPECT_EQ(counterclockwise_view(circle({q(1, 3)}), 0), (View{0}));
}

TEST(Views, MinViewPicksSmallerSweep) {
  EXPECT_EQ(min_view(circle({0, q(1, 4), q(3, 4)}), 0), (View{0, q(1, 4), q(3, 4)}));
  EXPECT_EQ(min_view(circle({0, q(1, 10), q(3, 10)}), 0), (View{0, q(1, 10), q(3, 10)}));
}

TEST(Symmetry, SquareHasFourAxes) {
  const Configuration c = circle({0, q(1, 4), q(1, 2), q(3, 4)});
  EXPECT_EQ(find_lines_of_symmetry(c).size(), 4U);
  EXPECT_EQ(rotational_order(c), 4);
  EXPECT_EQ(class_of(c), ConfigClass::kI5);
}

TEST(Symmetry, AsymmetricTriple) {
  const Configuration c = circle({0, q(1, 10), q(3, 10)});
  EXPECT_TRUE(find_lines_of_symmetry(c).empty());
  EXPECT_EQ(rotational_order(c), 1);
  EXPECT_EQ(class_of(c), ConfigClass::kI1);
  EXPECT_THROW(rotational_classes(c), Error);
}

TEST(Symmetry, SingleAxisThroughEmptyPoints) {
  const Configuration c = circle({q(1, 10), q(2, 10), q(8, 10), q(9, 10)});
  const auto axes = find_lines_of_symmetry(c);
  ASSERT_EQ(axes.size(), 1U);
  EXPECT_EQ(axes.front(), (Axis{0, q(1, 2)}));
  EXPECT_EQ(class_of(c), ConfigClass::kI3);
}

TEST(Symmetry, RotationalPairWithoutAxis) {
  const Configuration c = circle({0, q(1, 10), q(1, 4), q(1, 2), q(6, 10), q(3, 4)});
  EXPECT_EQ(rotational_order(c), 2);
  EXPECT_TRUE(find_lines_of_symmetry(c).empty());
  const auto classes = rotational_classes(c);
  ASSERT_EQ(classes.size(), 3U);
  for (const auto& cls : classes) {
    ASSERT_EQ(cls.size(), 2U);
    EXPECT_EQ(c[cls[1]] - c[cls[0]], q(1, 2));
  }
  EXPECT_EQ(class_of(c), ConfigClass::kI4);
}

TEST(Symmetry, RegularPolygonIsOneClass) {
  const Configuration c = circle({0, q(1, 3), q(2, 3)});
  EXPECT_EQ(rotational_order(c), 3);
  EXPECT_EQ(rotational_classes(c).size(), 1U);
}

TEST(Classify, AxisThroughExtremalRobot) {
  const Configuration c = circle({0, q(1, 4), q(3, 4)});
  EXPECT_EQ(class_of(c), ConfigClass::kI2);
}

TEST(Classify, NestedPolygonsWithoutExtremalOnAxes) {
  const Configuration c = circle(gen::i6_fixture());
  EXPECT_EQ(class_of(c), ConfigClass::kI6);
}

TEST(TotalOrder, FirstRobotHasSmallestView) {
  const Configuration c = circle({0, q(1, 10), q(3, 10)});
  const auto order = total_order(c);
  ASSERT_EQ(order.size(), 3U);
  EXPECT_EQ(order.front(), 0U);
  const auto views = min_views(c);
  for (std::size_t k = 1; k < order.size(); ++k) EXPECT_LT(views[order[k - 1]], views[order[k]]);
  EXPECT_EQ(total_order(circle({q(1, 2)})), (std::vector<std::size_t>{0}));
  EXPECT_THROW(total_order(circle({0, q(1, 4), q(3, 4)})), Error);
}

TEST(Segment, MidpointSymmetry) {
  const Space seg = Space::segment(0, 1);
  EXPECT_TRUE(is_midpoint_symmetric(Configuration(seg, {q(1, 5), q(4, 5)})));
  EXPECT_FALSE(is_midpoint_symmetric(Configuration(seg, {q(1, 5), q(3, 5)})));
}

// Rotates positions by `shift` and scales everything by `scale`.
Configuration transform(const Configuration& c, const Scalar& shift, const Scalar& scale) {
  const Space space = Space::circle(c.space().circumference() * scale);
  std::vector<Scalar> out;
  for (const auto& p : c.positions()) out.push_back(space.normalize((p + shift) * scale));
  return Configuration(space, out);
}

TEST(ConfigurationProperty, ReflectionAndRotationSoundness) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Configuration c = gen::random_circle(seed, 8);
    for (const Axis& axis : find_lines_of_symmetry(c)) {
      EXPECT_TRUE(is_symmetric_about(c, axis));
      for (const auto& p : c.positions()) EXPECT_TRUE(c.contains(reflect(p, axis, c.space())));
    }
    const int w = rotational_order(c);
    const auto n = static_cast<int>(c.size());
    EXPECT_TRUE(is_invariant_under_rotation(c, Scalar(1) / Scalar(w)));
    for (int k = w + 1; k <= n; ++k) {
      EXPECT_FALSE(is_invariant_under_rotation(c, Scalar(1) / Scalar(k)));
    }
  }
}

// An axis maps robot i onto robot j exactly when the clockwise view of i
// equals the counterclockwise view of j.
TEST(ConfigurationProperty, AxesMatchViewPairs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Configuration c = gen::random_circle(seed, 8);
    bool pair = false;
    for (std::size_t i = 0; i < c.size() && !pair; ++i) {
      for (std::size_t j = 0; j < c.size() && !pair; ++j) pair = clockwise_view(c, i) == counterclockwise_view(c, j);
    }
    EXPECT_EQ(pair, !find_lines_of_symmetry(c).empty()) << join(c.positions());
  }
}

TEST(ConfigurationProperty, ClassifierAgreesWithDefinitions) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Configuration c = gen::random_circle(seed, 8);
    const auto extremal = extremal_set(c).extremal;
    const auto axes = find_lines_of_symmetry(c);
    bool extremal_on_axis = false;
    for (const auto& axis : axes) {
      for (std::size_t e : extremal) extremal_on_axis = extremal_on_axis || on_axis(c[e], axis);
    }
    ConfigClass expected = ConfigClass::kI1;
    if (axes.size() == 1) expected = extremal_on_axis ? ConfigClass::kI2 : ConfigClass::kI3;
    if (axes.size() > 1) expected = extremal_on_axis ? ConfigClass::kI5 : ConfigClass::kI6;
    if (axes.empty() && rotational_order(c) >= 2) expected = ConfigClass::kI4;
    EXPECT_EQ(classify(c, extremal), expected) << join(c.positions());
  }
}

TEST(ConfigurationProperty, TotalOrderInvariantUnderRotationAndScale) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Configuration c = gen::random_circle(seed, 7);
    if (!find_lines_of_symmetry(c).empty() || rotational_order(c) > 1) continue;
    const auto order = total_order(c);
    const Configuration moved = transform(c, q(7, 60), q(5, 3));
    std::vector<Scalar> ranked;
    for (std::size_t k : order) ranked.push_back(moved.space().normalize((c[k] + q(7, 60)) * q(5, 3)));
    std::vector<Scalar> expected;
    for (std::size_t k : total_order(moved)) expected.push_back(moved[k]);
    EXPECT_EQ(ranked, expected);
    ++checked;
  }
  EXPECT_GT(checked, 50U);
}

}  // namespace
}  // namespace minsum
