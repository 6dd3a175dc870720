#include "stirep/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "stirep/common.hpp"
#include "stirep/parallel.hpp"

namespace stirep {
namespace {

SideBoundary find_exit(const Propagator& prop, double sign, const RadiusOptions& o,
                       std::size_t& evaluations) {
  auto inside = [&](double magnitude) {
    ++evaluations;
    return prop.infidelity(sign * magnitude) <= o.threshold;
  };
  SideBoundary side;
  const auto steps = static_cast<long>(std::floor(o.rho_cap / o.march_step + 1e-9));
  double last_inside = 0.0;
  for (long k = 1; k <= steps; ++k) {
    const double probe = std::min(o.rho_cap, k * o.march_step);
    if (inside(probe)) {
      last_inside = probe;
      continue;
    }
    double lo = last_inside;
    double hi = probe;
    while (hi - lo > o.bisection_tol) {
      const double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
      ++side.bisection_iterations;
    }
    side.rho = lo;
    side.bracket = hi - lo;
    return side;
  }
  side.rho = o.rho_cap;
  side.capped = true;
  return side;
}

void sort_by_area(AreaSweep& sweep) {
  std::stable_sort(sweep.rows.begin(), sweep.rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.area_over_pi < b.area_over_pi; });
}

bool better(const RobustnessScan& a, double area_a, const RobustnessScan& b, double area_b) {
  if (a.valid != b.valid) return a.valid;
  if (!a.valid) return a.epsilon0 < b.epsilon0;
  if (a.radius != b.radius) return a.radius > b.radius;
  return area_a < area_b;
}

SweepRow scan_row(const PulsePair& pulses, const RadiusOptions& options) {
  SweepRow row{pulses.params(), generalized_area(pulses) / kPi, {}};
  row.scan = uh_radius(pulses, options);
  return row;
}

}  // namespace

RobustnessScan uh_radius(const Propagator& prop, const RadiusOptions& options) {
  if (!(options.march_step > 0.0) || !(options.bisection_tol > 0.0) || !(options.rho_cap > 0.0)) {
    throw DomainError("uh_radius: march step, bisection tolerance and cap must be positive");
  }
  RobustnessScan scan;
  scan.threshold = options.threshold;
  scan.epsilon0 = prop.infidelity(0.0);
  scan.evaluations = 1;
  scan.valid = scan.epsilon0 <= options.threshold;
  if (!scan.valid) return scan;
  scan.minus = find_exit(prop, -1.0, options, scan.evaluations);
  scan.plus = find_exit(prop, +1.0, options, scan.evaluations);
  scan.rho_minus = scan.minus.rho;
  scan.rho_plus = scan.plus.rho;
  scan.radius = std::min(scan.rho_minus, scan.rho_plus);
  scan.capped = scan.minus.capped || scan.plus.capped;
  return scan;
}

RobustnessScan uh_radius(const PulsePair& pulses, const RadiusOptions& options) {
  return uh_radius(Propagator(pulses, options.propagation), options);
}

const SweepRow* AreaSweep::best() const {
  const SweepRow* top = nullptr;
  for (const SweepRow& row : rows) {
    if (!row.scan.valid) continue;
    if (!top || better(row.scan, row.area_over_pi, top->scan, top->area_over_pi)) top = &row;
  }
  return top;
}

AreaSweep sweep_shaped(std::span<const double> phi0_grid, const TrackingParams& base,
                       const RadiusOptions& options) {
  AreaSweep sweep;
  sweep.family = PulseFamily::Shaped;
  sweep.rows = parallel_map<SweepRow>(phi0_grid.size(), [&](std::size_t i) {
    TrackingParams p = base;
    p.phi0 = phi0_grid[i];
    return scan_row(eval_shaped(p), options);
  });
  sort_by_area(sweep);
  return sweep;
}

AreaSweep sweep_gaussian(std::span<const double> peaks, std::span<const double> delays,
                         double sigma, double T, std::size_t n_grid, const RadiusOptions& options) {
  if (delays.empty()) throw DomainError("sweep_gaussian: empty delay grid");
  AreaSweep sweep;
  sweep.family = PulseFamily::Gaussian;
  sweep.rows = parallel_map<SweepRow>(peaks.size(), [&](std::size_t i) {
    std::optional<SweepRow> best;
    for (double delay : delays) {
      const GaussianParams gp{peaks[i], delay, sigma, T};
      const PulsePair pulses = sample_gaussian(gp, n_grid);
      if (!boundary_check(pulses).pass) {
        throw DomainError("sweep_gaussian: boundary check fails at peak " + std::to_string(gp.peak) +
                          ", delay " + std::to_string(delay));
      }
      SweepRow row{gp, generalized_area(pulses) / kPi, {}};
      const Propagator prop(pulses, options.propagation);
      row.scan = uh_radius(prop, options);
      if (!best || better(row.scan, row.area_over_pi, best->scan, best->area_over_pi)) {
        best = std::move(row);
      }
    }
    return *best;
  });
  sort_by_area(sweep);
  return sweep;
}

AreaSweep sweep_adiabopt(std::span<const double> peaks, const AdiabOptParams& shape,
                         std::size_t n_grid, const RadiusOptions& options) {
  AreaSweep sweep;
  sweep.family = PulseFamily::AdiabOpt;
  sweep.rows = parallel_map<SweepRow>(peaks.size(), [&](std::size_t i) {
    AdiabOptParams p = shape;
    p.peak = peaks[i];
    const PulsePair pulses = sample_adiabopt(p, n_grid);
    if (!boundary_check(pulses).pass) {
      throw DomainError("sweep_adiabopt: boundary check fails at peak " + std::to_string(p.peak));
    }
    return scan_row(pulses, options);
  });
  sort_by_area(sweep);
  return sweep;
}

std::vector<double> default_delay_grid(double T) {
  std::vector<double> delays;
  for (int k = 0; k <= 250; ++k) delays.push_back(0.002 * k * T);
  return delays;
}

ContourMap contour_map(std::span<const double> phi0_grid, std::span<const double> rho_grid,
                       const TrackingParams& base, const PropagationOptions& options) {
  struct Row {
    double area = 0.0;
    std::vector<double> values;
  };
  const std::vector<Row> rows = parallel_map<Row>(phi0_grid.size(), [&](std::size_t i) {
    TrackingParams p = base;
    p.phi0 = phi0_grid[i];
    const PulsePair pulses = eval_shaped(p);
    const Propagator prop(pulses, options);
    Row row;
    row.area = generalized_area(pulses) / kPi;
    for (double rho : rho_grid) {
      row.values.push_back(std::log10(std::max(prop.infidelity(rho), kContourFloor)));
    }
    return row;
  });
  ContourMap map;
  map.phi0.assign(phi0_grid.begin(), phi0_grid.end());
  map.rho.assign(rho_grid.begin(), rho_grid.end());
  for (const Row& row : rows) {
    map.area_over_pi.push_back(row.area);
    map.log10_eps.insert(map.log10_eps.end(), row.values.begin(), row.values.end());
  }
  return map;
}

}  // namespace stirep
