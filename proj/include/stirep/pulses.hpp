#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "stirep/params.hpp"

namespace stirep {

enum class PulseFamily { Shaped, Gaussian, AdiabOpt };

std::string_view to_string(PulseFamily family);

/// Instantaneous pump and Stokes Rabi frequencies.
struct FieldPair {
  double pump = 0.0;
  double stokes = 0.0;
};

/// A pump/Stokes waveform pair: the closed-form family that generated it and
/// its samples on a uniform grid over [0, T].
class PulsePair {
 public:
  PulsePair(PulseParams params, std::vector<double> t, std::vector<double> pump,
            std::vector<double> stokes);

  PulseFamily family() const;
  const PulseParams& params() const { return params_; }

  std::span<const double> t() const { return t_; }
  std::span<const double> pump() const { return pump_; }
  std::span<const double> stokes() const { return stokes_; }
  std::size_t size() const { return t_.size(); }
  double step() const { return t_[1] - t_[0]; }
  double duration() const { return t_.back() - t_.front(); }

  /// Closed-form evaluation at an arbitrary time inside the window.
  FieldPair at(double t) const;

 private:
  PulseParams params_;
  std::vector<double> t_;
  std::vector<double> pump_;
  std::vector<double> stokes_;
};

FieldPair eval_gaussian(const GaussianParams& p, double t);
FieldPair eval_adiabopt(const AdiabOptParams& p, double t);

/// Closed-form field of the tracking solution at time t (no trajectory needed).
FieldPair eval_shaped_at(const TrackingParams& p, double t);

PulsePair eval_shaped(const TrackingParams& p);
PulsePair sample_gaussian(const GaussianParams& p, std::size_t n_grid = kDefaultGrid);
PulsePair sample_adiabopt(const AdiabOptParams& p, std::size_t n_grid = kDefaultGrid);

/// Integral of sqrt(P^2 + S^2) over the window, in rad.
double generalized_area(const PulsePair& pp);

struct PulseAreas {
  double pump = 0.0;
  double stokes = 0.0;
};

/// Signed areas of the pump and Stokes pulses.
PulseAreas pulse_areas(const PulsePair& pp);

struct BoundaryReport {
  bool pass = false;
  double max_ratio = 0.0;  // largest endpoint magnitude over the peak magnitude
};

inline constexpr double kBoundaryTolerance = 1e-6;

/// Checks that both fields are below 1e-6 of the peak magnitude at both ends.
BoundaryReport boundary_check(const PulsePair& pp);

}  // namespace stirep
