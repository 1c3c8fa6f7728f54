#include <gtest/gtest.h>

#include <cmath>

#include "dflux/flux_model.hpp"

using dflux::FluxModel;

TEST(FluxModel, LwrValues) {
  const auto f = FluxModel::lwr();
  EXPECT_DOUBLE_EQ(f.eval(0.6), 0.24);
  EXPECT_DOUBLE_EQ(f.deriv(0.6), -0.2);
  EXPECT_DOUBLE_EQ(f.eval(0.0), 0.0);
  EXPECT_DOUBLE_EQ(f.eval(1.0), 0.0);
  EXPECT_DOUBLE_EQ(f.lipschitz_bound(), 1.0);
  EXPECT_DOUBLE_EQ(f.argmax_point(), 0.5);
  EXPECT_DOUBLE_EQ(f.max_value(), 0.25);
  EXPECT_NO_THROW(f.validate());
}

TEST(FluxModel, VelocityIsFluxOverDensity) {
  const auto f = FluxModel::lwr();
  EXPECT_NEAR(dflux::v_of(f, 0.6), 0.4, 1e-15);
  EXPECT_DOUBLE_EQ(dflux::v_of(f, 0.0), 1.0);
  for (double r = 0.05; r <= 1.0; r += 0.05) EXPECT_NEAR(f.velocity(r), f.eval(r) / r, 1e-15);
}

TEST(FluxModel, DomainErrors) {
  const auto f = FluxModel::lwr();
  EXPECT_THROW(f.eval(1.5), dflux::DomainError);
  EXPECT_THROW(f.velocity(-0.1), dflux::DomainError);
  EXPECT_THROW(f.deriv(2.0), dflux::DomainError);
  EXPECT_NO_THROW(f.eval(-1e-14));
}

TEST(FluxModel, InverseDerivative) {
  const auto f = FluxModel::lwr();
  for (double r = 0.0; r <= 1.0; r += 0.125) EXPECT_NEAR(f.inverse_deriv(f.deriv(r)), r, 1e-15);
  EXPECT_DOUBLE_EQ(f.inverse_deriv(5.0), 0.0);
  EXPECT_DOUBLE_EQ(f.inverse_deriv(-5.0), 1.0);
}

TEST(FluxModel, TabulatedMatchesNodes) {
  const int n = 16;
  std::vector<double> values(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double r = static_cast<double>(i) / n;
    values[i] = r * (1.0 - r);
  }
  const auto f = FluxModel::tabulated(values);
  EXPECT_NO_THROW(f.validate());
  for (int i = 0; i <= n; ++i) EXPECT_NEAR(f.eval(static_cast<double>(i) / n), values[i], 1e-15);
  EXPECT_DOUBLE_EQ(f.argmax_point(), 0.5);
  EXPECT_DOUBLE_EQ(f.max_value(), 0.25);
  // slope of the first segment
  EXPECT_NEAR(f.v0(), 1.0 - 1.0 / n, 1e-14);
  // interpolation is below the concave LWR curve
  EXPECT_LE(f.eval(0.03), 0.03 * 0.97);
}

TEST(FluxModel, RejectsNonConcaveTable) {
  const auto f = FluxModel::tabulated({0.0, 0.3, 0.1, 0.3, 0.0});
  EXPECT_THROW(f.validate(), dflux::ConfigError);
  EXPECT_THROW(FluxModel::tabulated({0.1, 0.2, 0.0}), dflux::ConfigError);
}

TEST(FluxModel, CustomFluxHook) {
  // f(r) = sin(pi r) / pi, concave on [0,1]
  const double pi = std::acos(-1.0);
  const auto f = FluxModel::custom(
      "sine", [pi](double r) { return r <= 0.0 || r >= 1.0 ? 0.0 : std::sin(pi * r) / pi; },
      [pi](double r) { return std::cos(pi * r); }, 1.0, 0.5, 1.0);
  EXPECT_NO_THROW(f.validate());
  EXPECT_NEAR(f.max_value(), 1.0 / pi, 1e-15);
  EXPECT_NEAR(f.inverse_deriv(0.0), 0.5, 1e-12);
  const auto convex = FluxModel::custom(
      "bad", [](double r) { return r * r * (1.0 - r); }, [](double r) { return 2 * r - 3 * r * r; }, 1.0, 0.66, 0.0);
  EXPECT_THROW(convex.validate(), dflux::ConfigError);
}
