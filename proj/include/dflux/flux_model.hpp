#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dflux/errors.hpp"

namespace dflux {

// Slack tolerated on the density range before a DomainError is raised.
inline constexpr double kDensitySlack = 1e-12;

inline void check_density(double rho) {
  if (!(rho >= -kDensitySlack && rho <= 1.0 + kDensitySlack)) {
    throw DomainError("density outside [0,1]: " + std::to_string(rho));
  }
}

// Concave flux f on [0,1] with f(0)=f(1)=0.
class FluxModel {
 public:
  using Function = std::function<double(double)>;

  // f(rho) = rho (1 - rho)
  static FluxModel lwr();

  // User supplied flux with derivative and constants.
  static FluxModel custom(std::string name, Function f, Function df,
                          double lipschitz, double argmax, double v0);

  // Piecewise linear interpolation of values on a uniform grid of [0,1].
  static FluxModel tabulated(std::vector<double> values);

  double eval(double rho) const {
    check_density(rho);
    if (kind_ == Kind::Lwr) return rho * (1.0 - rho);
    return f_(rho);
  }
  double operator()(double rho) const { return eval(rho); }

  double deriv(double rho) const {
    check_density(rho);
    if (kind_ == Kind::Lwr) return 1.0 - 2.0 * rho;
    return df_(rho);
  }

  // Average velocity f(rho)/rho, with v(0) = v0.
  double velocity(double rho) const {
    check_density(rho);
    if (kind_ == Kind::Lwr) return 1.0 - rho;
    if (rho == 0.0) return v0_;
    return f_(rho) / rho;
  }

  // Density whose characteristic speed f' equals slope, clamped to [0,1].
  double inverse_deriv(double slope) const;

  double lipschitz_bound() const { return lipschitz_; }
  double argmax_point() const { return argmax_; }
  double max_value() const { return max_value_; }
  double v0() const { return v0_; }
  const std::string& name() const { return name_; }
  bool is_lwr() const { return kind_ == Kind::Lwr; }
  const std::vector<double>& table() const { return table_; }

  // Sampled concavity and consistency checks; throws ConfigError.
  void validate(int samples = 257) const;

 private:
  enum class Kind { Lwr, Callable };

  Kind kind_ = Kind::Lwr;
  std::string name_;
  Function f_;
  Function df_;
  double lipschitz_ = 1.0;
  double argmax_ = 0.5;
  double max_value_ = 0.25;
  double v0_ = 1.0;
  std::vector<double> table_;
};

inline double v_of(const FluxModel& flux, double rho) { return flux.velocity(rho); }

}  // namespace dflux
