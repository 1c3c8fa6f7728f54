#include "dflux/interface_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dflux/errors.hpp"

namespace dflux {

InterfacePath::InterfacePath(double xi0, std::vector<SlopeSegment> segments, bool zero_after_last)
    : xi0_(xi0), segments_(std::move(segments)), zero_after_last_(zero_after_last) {
  if (!std::isfinite(xi0_)) throw ConfigError("xi0 must be finite");
  starts_.push_back(0.0);
  positions_.push_back(xi0_);
  for (const auto& s : segments_) {
    if (!(s.duration > 0.0) || !std::isfinite(s.duration)) throw ConfigError("segment durations must be positive");
    if (!std::isfinite(s.slope)) throw ConfigError("segment slopes must be finite");
    positions_.push_back(positions_.back() + s.slope * s.duration);
    starts_.push_back(starts_.back() + s.duration);
  }
}

double InterfacePath::tail_slope() const {
  if (segments_.empty() || zero_after_last_) return 0.0;
  return segments_.back().slope;
}

double InterfacePath::position(double t) const {
  if (t < 0.0) throw ArgumentError("interface position queried at negative time");
  const std::size_t count = segments_.size();
  // index of the segment containing t
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
  const auto i = static_cast<std::size_t>(it - starts_.begin()) - 1;
  if (i >= count) return positions_[count] + tail_slope() * (t - starts_[count]);
  return positions_[i] + segments_[i].slope * (t - starts_[i]);
}

double InterfacePath::slope_at(double t) const {
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
  const auto i = static_cast<std::size_t>(it - starts_.begin()) - 1;
  if (i >= segments_.size()) return tail_slope();
  return segments_[i].slope;
}

double InterfacePath::slope_average(double t1, double t2) const {
  if (!(t2 > t1) || t1 < 0.0) throw ArgumentError("slope_average needs 0 <= t1 < t2");
  double weighted = 0.0;
  double total = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  int pieces = 0;
  double only = 0.0;
  auto add = [&](double a, double b, double slope) {
    const double w = std::min(b, t2) - std::max(a, t1);
    if (!(w > 0.0)) return;
    weighted += slope * w;
    total += w;
    lo = std::min(lo, slope);
    hi = std::max(hi, slope);
    only = slope;
    ++pieces;
  };
  for (std::size_t i = 0; i < segments_.size(); ++i) add(starts_[i], starts_[i + 1], segments_[i].slope);
  add(starts_.back(), std::numeric_limits<double>::infinity(), tail_slope());
  if (pieces == 1) return only;
  return std::clamp(weighted / total, lo, hi);
}

double InterfacePath::lipschitz_bound() const {
  double lip = std::abs(tail_slope());
  for (const auto& s : segments_) lip = std::max(lip, std::abs(s.slope));
  return lip;
}

std::pair<double, double> InterfacePath::range(double T) const {
  double lo = xi0_;
  double hi = xi0_;
  for (double s : starts_) {
    if (s > T) break;
    const double x = position(s);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double x = position(T);
  return {std::min(lo, x), std::max(hi, x)};
}

}  // namespace dflux
