#include <gtest/gtest.h>

#include "dflux/interface_path.hpp"
#include "dflux/errors.hpp"

using dflux::InterfacePath;

namespace {
InterfacePath path_b() { return InterfacePath(-0.1, {{0.3, 0.1}, {0.3, 0.25}, {1.0, 0.0}}); }
}  // namespace

TEST(InterfacePath, PositionAlongSegments) {
  const auto p = path_b();
  EXPECT_DOUBLE_EQ(p.position(0.0), -0.1);
  EXPECT_NEAR(p.position(0.3), -0.07, 1e-15);
  EXPECT_NEAR(p.position(0.6), 0.005, 1e-15);
  EXPECT_NEAR(p.position(0.45), -0.07 + 0.25 * 0.15, 1e-15);
  EXPECT_NEAR(p.position(3.0), 0.005, 1e-15);
}

TEST(InterfacePath, SlopeAverageInsideOneSegment) {
  const auto p = path_b();
  EXPECT_EQ(p.slope_average(0.1, 0.2), 0.1);
  EXPECT_EQ(p.slope_average(0.31, 0.3100001), 0.25);
}

TEST(InterfacePath, SlopeAverageAcrossBreakpoint) {
  const auto p = path_b();
  EXPECT_NEAR(p.slope_average(0.2, 0.4), 0.175, 1e-15);
  EXPECT_NEAR(p.slope_average(0.0, 0.6), (0.005 + 0.1) / 0.6, 1e-15);
  for (double t = 0.0; t < 1.0; t += 0.01) {
    const double a = p.slope_average(t, t + 0.013);
    EXPECT_LE(std::abs(a), p.lipschitz_bound());
    EXPECT_NEAR(a * 0.013, p.position(t + 0.013) - p.position(t), 1e-15);
  }
}

TEST(InterfacePath, TailSlope) {
  const InterfacePath persist(0.0, {{0.5, 0.2}});
  const InterfacePath stop(0.0, {{0.5, 0.2}}, true);
  EXPECT_NEAR(persist.position(1.0), 0.2, 1e-15);
  EXPECT_NEAR(stop.position(1.0), 0.1, 1e-15);
  EXPECT_EQ(stop.slope_at(2.0), 0.0);
}

TEST(InterfacePath, RangeAndLipschitz) {
  const InterfacePath p(-0.1, {{0.3, 0.1}, {0.3, 0.25}, {0.4, -1.5}, {1.0, 0.0}});
  EXPECT_EQ(p.lipschitz_bound(), 1.5);
  const auto [lo, hi] = p.range(1.0);
  EXPECT_NEAR(lo, -0.595, 1e-15);
  EXPECT_NEAR(hi, 0.005, 1e-15);
}

TEST(InterfacePath, Errors) {
  const auto p = path_b();
  EXPECT_THROW(p.slope_average(0.2, 0.2), dflux::ArgumentError);
  EXPECT_THROW(p.slope_average(0.3, 0.2), dflux::ArgumentError);
  EXPECT_THROW(InterfacePath(0.0, {{-1.0, 0.2}}), dflux::ConfigError);
}
