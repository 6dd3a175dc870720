#pragma once

#include <cstddef>
#include <variant>

namespace stirep {

inline constexpr std::size_t kDefaultGrid = 4001;

// Time is measured in units of the total duration T throughout; with the
// default T = 1 all amplitudes come out in 1/T.

/// Tracking solution of the single-mode invariant: a tanh ramp of the
/// transfer angle theta and a capped excursion phi(theta).
struct TrackingParams {
  double phi0 = 0.12815;  // excursion cap, rad
  double v0 = 0.028;      // ramp time scale
  double T = 1.0;         // total duration; the window is [0, T]
  std::size_t n_grid = kDefaultGrid;

  /// Throws DomainError unless 0 < phi0 < pi/2, v0 > 0, T > 0, n_grid >= 2.
  void validate() const;
};

/// Gaussian STIRAP pair. A positive delay puts the Stokes pulse first.
struct GaussianParams {
  double peak = 0.0;
  double delay = 0.0;
  double sigma = 0.04;
  double T = 1.0;

  void validate() const;
};

/// Hypergaussian envelope with a logistic mixing angle.
struct AdiabOptParams {
  double peak = 0.0;
  double sigma = 0.04;
  double waist_factor = 1.0;  // m
  int power = 1;              // n, the envelope is exp[-(t/(m sigma))^(2n)]
  double switch_rate = 4.0;   // lambda
  double T = 1.0;

  void validate() const;

  static AdiabOptParams opt1(double peak) { return {peak, 0.04, 1.0, 1, 4.0, 1.0}; }
  static AdiabOptParams opt2(double peak) { return {peak, 0.04, 1.0, 2, 5.0, 1.0}; }
};

using PulseParams = std::variant<TrackingParams, GaussianParams, AdiabOptParams>;

}  // namespace stirep
