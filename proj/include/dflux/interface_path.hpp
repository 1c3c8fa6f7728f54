#pragma once

#include <utility>
#include <vector>

namespace dflux {

struct SlopeSegment {
  double duration;
  double slope;
};

// Piecewise linear, Lipschitz interface trajectory xi(t), t >= 0.
class InterfacePath {
 public:
  InterfacePath() = default;
  // Beyond the last segment the final slope persists unless zero_after_last.
  InterfacePath(double xi0, std::vector<SlopeSegment> segments, bool zero_after_last = false);

  double position(double t) const;
  // (xi(t2) - xi(t1)) / (t2 - t1), summed over segment overlaps.
  double slope_average(double t1, double t2) const;
  double slope_at(double t) const;
  double lipschitz_bound() const;
  // min and max of xi over [0, T]
  std::pair<double, double> range(double T) const;

  double xi0() const { return xi0_; }
  const std::vector<SlopeSegment>& segments() const { return segments_; }
  bool zero_after_last() const { return zero_after_last_; }

 private:
  double tail_slope() const;

  double xi0_ = 0.0;
  std::vector<SlopeSegment> segments_;
  std::vector<double> starts_;     // segment start times
  std::vector<double> positions_;  // xi at segment starts, plus the end of the last one
  bool zero_after_last_ = false;
};

}  // namespace dflux
