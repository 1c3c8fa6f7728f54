#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dflux/riemann.hpp"

using namespace dflux;

namespace {

// rho^2 - (1 + a) rho + (a rhoR - f(rhoR)) = 0, smaller root, for f = rho (1 - rho).
double rho_m_closed_form(double rhoR, double a) {
  const double c = a * rhoR - rhoR * (1.0 - rhoR);
  return 0.5 * ((1.0 + a) - std::sqrt((1.0 + a) * (1.0 + a) - 4.0 * c));
}

}  // namespace

TEST(ClassicalRiemann, PlusShock) {
  const auto f = FluxModel::lwr();
  const auto sol = classical_riemann(FluxSide::Plus, 0.2, 0.6, f);
  ASSERT_EQ(sol.wave_speeds().size(), 1u);
  EXPECT_NEAR(sol.wave_speeds()[0], 0.2, 1e-15);
  EXPECT_EQ(sol(0.1), 0.2);
  EXPECT_EQ(sol(0.3), 0.6);
}

TEST(ClassicalRiemann, MinusShockToVacuum) {
  const auto f = FluxModel::lwr();
  const auto sol = classical_riemann(FluxSide::Minus, 0.6, 0.0, f);
  ASSERT_EQ(sol.wave_speeds().size(), 1u);
  EXPECT_NEAR(sol.wave_speeds()[0], -0.4, 1e-15);
  EXPECT_EQ(sol(-0.5), 0.6);
  EXPECT_EQ(sol(-0.3), 0.0);
}

TEST(ClassicalRiemann, Fans) {
  const auto f = FluxModel::lwr();
  const auto plus = classical_riemann(FluxSide::Plus, 0.9, 0.6, f);
  EXPECT_NEAR(plus(-0.5), 0.75, 1e-15);  // f'(rho) = 1 - 2 rho = -0.5
  EXPECT_EQ(plus(-0.9), 0.9);
  EXPECT_EQ(plus(0.0), 0.6);
  const auto minus = classical_riemann(FluxSide::Minus, 0.0, 0.6, f);
  // -f'(rho) = 2 rho - 1 = s on [-1, 0.2]
  EXPECT_NEAR(minus(-0.2), 0.4, 1e-15);
  EXPECT_EQ(minus(-1.5), 0.0);
  EXPECT_EQ(minus(0.5), 0.6);
}

TEST(ClassicalRiemann, SolvesTheEquationWeakly) {
  // integral of rho over [-1,1] at t=1 equals initial mass minus boundary outflow
  const auto f = FluxModel::lwr();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double l = u(rng), r = u(rng);
    for (auto side : {FluxSide::Plus, FluxSide::Minus}) {
      const auto sol = classical_riemann(side, l, r, f);
      const int n = 200000;
      double mass = 0.0;
      for (int k = 0; k < n; ++k) mass += sol(-2.0 + 4.0 * (k + 0.5) / n) * 4.0 / n;
      const double sgn = side == FluxSide::Plus ? 1.0 : -1.0;
      const double expected = 2.0 * (l + r) - (sgn * f.eval(r) - sgn * f.eval(l));
      EXPECT_NEAR(mass, expected, 1e-4) << l << " " << r;
    }
  }
}

TEST(IntermediateState, ClosedForm) {
  const auto f = FluxModel::lwr();
  EXPECT_NEAR(solve_intermediate_state(0.9, 0.25, FluxSide::Plus, f), (50.0 - std::sqrt(1636.0)) / 80.0, 1e-12);
  EXPECT_NEAR(solve_intermediate_state(0.9, 0.25, FluxSide::Plus, f), 0.1194058, 1e-6);
  EXPECT_NEAR(solve_intermediate_state(0.9, 0.4, FluxSide::Plus, f), 0.7 - std::sqrt(0.88) / 2.0, 1e-12);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = u(rng);
    const double a = f.velocity(r) + (1.2 - f.velocity(r)) * u(rng);
    const double m = solve_intermediate_state(r, a, FluxSide::Plus, f);
    EXPECT_NEAR(m, rho_m_closed_form(r, a), 1e-11);
    EXPECT_LE(std::abs(germ_residual(m, r, a, f)), 1e-12);
    const double mm = solve_intermediate_state(r, -a, FluxSide::Minus, f);
    EXPECT_NEAR(mm, m, 1e-12);
  }
}

TEST(IntermediateState, DegeneratesToVacuum) {
  const auto f = FluxModel::lwr();
  EXPECT_EQ(solve_intermediate_state(0.6, 0.4, FluxSide::Plus, f), 0.0);
  EXPECT_LT(solve_intermediate_state(0.6, 0.4 + 1e-9, FluxSide::Plus, f), 1e-8);
  EXPECT_THROW(solve_intermediate_state(0.6, 0.3, FluxSide::Plus, f), ArgumentError);
  EXPECT_THROW(solve_intermediate_state(0.6, -0.3, FluxSide::Minus, f), ArgumentError);
  EXPECT_THROW(solve_intermediate_state(0.9, 0.4, FluxSide::Plus, f, 1e-300, 3), NumericalError);
}

TEST(InterfaceRiemann, VacuumRegime) {
  const auto f = FluxModel::lwr();
  const auto sol = interface_riemann(0.6, 0.6, 0.0, f);
  EXPECT_EQ(sol(-0.5), 0.6);
  EXPECT_EQ(sol(0.0), 0.0);
  EXPECT_EQ(sol(0.5), 0.6);
  EXPECT_NEAR(sol.wave_speeds()[0], -0.4, 1e-15);
  EXPECT_NEAR(sol.wave_speeds()[1], 0.4, 1e-15);
  // boundary alpha = v(rhoR) stays in the vacuum regime
  const auto edge = interface_riemann(0.6, 0.6, 0.4, f);
  EXPECT_EQ(edge.left_limit(0.4), 0.0);
  EXPECT_EQ(edge.right_limit(0.4), 0.6);
}

TEST(InterfaceRiemann, FastInterfaceCreatesIntermediateState) {
  const auto f = FluxModel::lwr();
  const auto sol = interface_riemann(0.0, 0.9, 0.4, f);
  const double m = 0.7 - std::sqrt(0.88) / 2.0;
  EXPECT_NEAR(sol.left_limit(0.4), m, 1e-12);
  EXPECT_EQ(sol.right_limit(0.4), 0.9);
  // fan from vacuum: -f'(rho) = s on [-1, 2 m - 1]
  EXPECT_NEAR(sol(-0.9), 0.05, 1e-12);
  EXPECT_NEAR(sol(2 * m - 1 + 1e-9), m, 1e-12);
}

TEST(InterfaceRiemann, TracesAreGermMembers) {
  const auto f = FluxModel::lwr();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0), ua(-1.5, 1.5);
  for (int i = 0; i < 1000; ++i) {
    const double l = u(rng), r = u(rng), a = ua(rng);
    const auto sol = interface_riemann(l, r, a, f);
    const double gl = sol.left_limit(a), gr = sol.right_limit(a);
    EXPECT_TRUE(germ_membership(gl, gr, a, f)) << l << " " << r << " " << a;
    // bounded by the data
    for (double s = -3.0; s <= 3.0; s += 0.01) {
      EXPECT_LE(sol(s), std::max(l, r) + 1e-15);
      EXPECT_GE(sol(s), 0.0);
    }
    // at a discontinuous interface one side is undercompressive
    if (std::abs(gl - gr) > 1e-9) {
      const double lhs = std::min(0.0, -a - f.deriv(gl));
      const double rhs = std::max(0.0, -a + f.deriv(gr));
      EXPECT_NEAR(lhs * rhs, 0.0, 1e-9);
    }
    // wave speeds strictly ordered
    const auto ws = sol.wave_speeds();
    for (std::size_t k = 1; k < ws.size(); ++k) EXPECT_LE(ws[k - 1], ws[k]);
  }
}

TEST(Germ, DissipativityOnMaximalGerm) {
  const auto f = FluxModel::lwr();
  for (double a : {0.4, 0.1, -0.3, 0.0}) {
    std::vector<std::pair<double, double>> germ = {{0.0, 0.0}, {1.0, 1.0}};
    for (double r = 0.0; r <= 1.0; r += 0.01) {
      if (a > 0.0 && a > f.velocity(r)) germ.push_back({solve_intermediate_state(r, a, FluxSide::Plus, f), r});
      if (a < 0.0 && a < -f.velocity(r)) germ.push_back({r, solve_intermediate_state(r, a, FluxSide::Minus, f)});
    }
    if (a >= 0.0) germ.push_back({0.0, 1.0 - a});
    for (const auto& [pl, pr] : germ) EXPECT_TRUE(germ_membership(pl, pr, a, f)) << pl << " " << pr << " " << a;
    for (const auto& p : germ) {
      for (const auto& q : germ) EXPECT_GE(dissipativity_gap(p.first, p.second, q.first, q.second, a, f), -1e-12);
    }
  }
}

TEST(Germ, NonGermPairsAreRejected) {
  const auto f = FluxModel::lwr();
  EXPECT_FALSE(germ_membership(0.6, 0.6, 0.4, f));
  EXPECT_TRUE(germ_membership(0.0, 0.6, 0.4, f));
  EXPECT_NEAR(germ_residual(0.5, 0.5, 0.0, f), 0.5, 1e-15);
}
