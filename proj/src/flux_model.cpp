#include "dflux/flux_model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dflux {

FluxModel FluxModel::lwr() {
  FluxModel m;
  m.kind_ = Kind::Lwr;
  m.name_ = "lwr";
  return m;
}

FluxModel FluxModel::custom(std::string name, Function f, Function df, double lipschitz,
                            double argmax, double v0) {
  if (!f || !df) throw ConfigError("custom flux needs both f and f'");
  if (!(lipschitz > 0.0) || !std::isfinite(lipschitz)) throw ConfigError("flux Lipschitz bound must be positive");
  if (!(argmax > 0.0 && argmax < 1.0)) throw ConfigError("flux argmax must lie in (0,1)");
  if (!std::isfinite(v0)) throw ConfigError("flux v0 must be finite");
  FluxModel m;
  m.kind_ = Kind::Callable;
  m.name_ = std::move(name);
  m.f_ = std::move(f);
  m.df_ = std::move(df);
  m.lipschitz_ = lipschitz;
  m.argmax_ = argmax;
  m.max_value_ = m.f_(argmax);
  m.v0_ = v0;
  return m;
}

FluxModel FluxModel::tabulated(std::vector<double> values) {
  if (values.size() < 3) throw ConfigError("tabulated flux needs at least 3 nodes");
  if (values.front() != 0.0 || values.back() != 0.0) {
    throw ConfigError("tabulated flux must vanish at 0 and 1");
  }
  const auto cells = static_cast<double>(values.size() - 1);
  auto table = std::make_shared<std::vector<double>>(values);
  auto slope_of = [table, cells](std::size_t i) {
    return ((*table)[i + 1] - (*table)[i]) * cells;
  };
  auto segment = [table, cells](double rho) {
    const auto last = table->size() - 2;
    const double pos = std::clamp(rho, 0.0, 1.0) * cells;
    return std::min(static_cast<std::size_t>(pos), last);
  };
  auto f = [table, cells, segment](double rho) {
    rho = std::clamp(rho, 0.0, 1.0);
    const std::size_t i = segment(rho);
    const double w = rho * cells - static_cast<double>(i);
    return (1.0 - w) * (*table)[i] + w * (*table)[i + 1];
  };
  auto df = [slope_of, segment](double rho) { return slope_of(segment(rho)); };

  double lip = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) lip = std::max(lip, std::abs(slope_of(i)));
  const auto peak = std::max_element(values.begin(), values.end());
  const double argmax = static_cast<double>(peak - values.begin()) / cells;

  FluxModel m;
  m.kind_ = Kind::Callable;
  m.name_ = "tabulated";
  m.f_ = f;
  m.df_ = df;
  m.lipschitz_ = lip > 0.0 ? lip : 1.0;
  m.argmax_ = argmax;
  m.max_value_ = *peak;
  m.v0_ = slope_of(0);
  m.table_ = std::move(values);
  return m;
}

double FluxModel::inverse_deriv(double slope) const {
  if (kind_ == Kind::Lwr) return std::clamp(0.5 * (1.0 - slope), 0.0, 1.0);
  // f' is non-increasing: bisect for the crossing
  if (df_(0.0) <= slope) return 0.0;
  if (df_(1.0) >= slope) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (df_(mid) > slope) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

void FluxModel::validate(int samples) const {
  if (samples < 3) throw ArgumentError("flux validation needs at least 3 samples");
  if (eval(0.0) != 0.0 || eval(1.0) != 0.0) throw ConfigError("flux must vanish at 0 and 1");
  std::vector<double> x(samples), y(samples);
  for (int i = 0; i < samples; ++i) {
    x[i] = static_cast<double>(i) / (samples - 1);
    y[i] = eval(x[i]);
  }
  double sampled_max = 0.0;
  for (int i = 0; i < samples; ++i) {
    if (y[i] < -1e-14) throw ConfigError("flux must be non-negative on [0,1]");
    sampled_max = std::max(sampled_max, y[i]);
    if (std::abs(deriv(x[i])) > lipschitz_ + 1e-9) throw ConfigError("flux derivative exceeds its Lipschitz bound");
  }
  if (!(sampled_max > 0.0)) throw ConfigError("flux must be positive somewhere in (0,1)");
  for (int i = 1; i + 1 < samples; ++i) {
    if (y[i] + 1e-12 < 0.5 * (y[i - 1] + y[i + 1])) throw ConfigError("flux is not concave");
  }
  if (max_value_ + 1e-12 < sampled_max) throw ConfigError("flux argmax is inconsistent with sampled values");
  double prev_v = v0_;
  for (int i = 1; i < samples; ++i) {
    const double v = y[i] / x[i];
    if (v > prev_v + 1e-9) throw ConfigError("flux velocity f(rho)/rho is not non-increasing");
    prev_v = v;
  }
}

}  // namespace dflux
