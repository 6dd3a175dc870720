#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stirep/dynamics.hpp"
#include "stirep/params.hpp"
#include "stirep/pulses.hpp"

namespace stirep {

inline constexpr double kUhThreshold = 1e-4;

struct RadiusOptions {
  double threshold = kUhThreshold;
  double march_step = 0.005;
  double bisection_tol = 1e-5;
  double rho_cap = 1.0;
  PropagationOptions propagation;
};

/// Boundary of the UH-fidelity region on one side of rho = 0.
struct SideBoundary {
  double rho = 0.0;           // |rho| of the last point found inside
  double bracket = 0.0;       // width of the final bisection bracket
  int bisection_iterations = 0;
  bool capped = false;        // no exit found up to rho_cap
};

struct RobustnessScan {
  double threshold = kUhThreshold;
  double epsilon0 = 1.0;  // infidelity of the unperturbed transfer
  bool valid = false;     // epsilon0 <= threshold
  double rho_minus = 0.0;
  double rho_plus = 0.0;
  double radius = 0.0;    // min(rho_minus, rho_plus); zero when invalid
  bool capped = false;
  SideBoundary minus;
  SideBoundary plus;
  std::size_t evaluations = 0;
};

/// UH-fidelity radius: outward march in steps of `march_step` to the first
/// point leaving the threshold region around rho = 0, then bisection.
RobustnessScan uh_radius(const PulsePair& pulses, const RadiusOptions& options = {});
RobustnessScan uh_radius(const Propagator& propagator, const RadiusOptions& options = {});

struct SweepRow {
  PulseParams params;
  double area_over_pi = 0.0;
  RobustnessScan scan;
};

/// Rows sorted by generalized area.
struct AreaSweep {
  PulseFamily family = PulseFamily::Shaped;
  std::vector<SweepRow> rows;

  /// Row with the largest defined radius, or nullptr if none is valid.
  const SweepRow* best() const;
};

AreaSweep sweep_shaped(std::span<const double> phi0_grid, const TrackingParams& base,
                       const RadiusOptions& options = {});

/// For each peak the delay maximising the radius is kept (ties go to the
/// smaller area). Rows without any UH-fidelity delay keep the delay of least
/// infidelity and an invalid scan.
AreaSweep sweep_gaussian(std::span<const double> peaks, std::span<const double> delays,
                         double sigma, double T, std::size_t n_grid,
                         const RadiusOptions& options = {});

AreaSweep sweep_adiabopt(std::span<const double> peaks, const AdiabOptParams& shape,
                         std::size_t n_grid, const RadiusOptions& options = {});

/// Delay grid [0, 0.5 T] in steps of 0.002 T.
std::vector<double> default_delay_grid(double T = 1.0);

inline constexpr double kContourFloor = 1e-12;

/// log10 of the infidelity over (phi0, rho); row i belongs to phi0_grid[i].
struct ContourMap {
  std::vector<double> phi0;
  std::vector<double> area_over_pi;
  std::vector<double> rho;
  std::vector<double> log10_eps;  // row-major, rows x rho.size()

  double at(std::size_t row, std::size_t col) const { return log10_eps[row * rho.size() + col]; }
};

ContourMap contour_map(std::span<const double> phi0_grid, std::span<const double> rho_grid,
                       const TrackingParams& base, const PropagationOptions& options = {});

}  // namespace stirep
