#include "stirep/invariant.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "stirep/common.hpp"
#include "stirep/quadrature.hpp"

namespace stirep {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Below this value of theta (pi/2 - theta) the ratio theta_dot / tan(phi) is
// replaced by its leading-order limit sqrt(x) / (v0 phi0).
constexpr double kEndpointProduct = 1e-12;

double ramp_product(double theta, double complement) { return theta * complement; }

// theta_dot / sin(phi) and theta_dot * cot(phi) share the same leading term
// near the endpoints, where both tend to zero like sqrt(theta (pi/2 - theta)).
double endpoint_limit(double x, const TrackingParams& p) {
  return std::sqrt(x) / (p.v0 * p.phi0);
}

double phi_from_product(double x, double phi0) {
  return phi0 * (4.0 * std::sqrt(x) / kPi);
}

}  // namespace

void TrackingParams::validate() const {
  if (!(phi0 > 0.0 && phi0 < kPi / 2)) {
    throw DomainError("tracking: phi0 must lie in (0, pi/2), got " + std::to_string(phi0));
  }
  if (!(v0 > 0.0)) throw DomainError("tracking: v0 must be positive");
  if (!(T > 0.0)) throw DomainError("tracking: T must be positive");
  if (n_grid < 2) throw DomainError("tracking: n_grid must be at least 2");
}

double theta_of_t(double t, const TrackingParams& p) {
  // (pi/4) (tanh(u) + 1) written as a logistic function of 2u.
  const double u = (t - p.T / 2) / p.v0;
  return (kPi / 2) / (1.0 + std::exp(-2.0 * u));
}

double phi_of_theta(double theta, double phi0) {
  if (!(theta >= 0.0 && theta <= kPi / 2)) {
    throw DomainError("phi_of_theta: theta outside [0, pi/2]");
  }
  return phi_from_product(ramp_product(theta, kPi / 2 - theta), phi0);
}

EulerRates rates_of_theta(double theta, const TrackingParams& p) {
  if (!(theta >= 0.0 && theta <= kPi / 2)) {
    throw DomainError("rates_of_theta: theta outside [0, pi/2]");
  }
  EulerRates r;
  const double x = ramp_product(theta, kPi / 2 - theta);
  r.theta_dot = 4.0 / (kPi * p.v0) * x;
  if (x <= 0.0) {
    r.endpoint = true;
    return r;
  }
  r.phi_prime = (4.0 * p.phi0 / kPi) * (kPi / 4 - theta) / std::sqrt(x);
  r.phi_dot = r.phi_prime * r.theta_dot;
  return r;
}

namespace detail {

FieldPair shaped_fields(double theta, double complement, const TrackingParams& p) {
  const double x = ramp_product(theta, complement);
  // phi_dot = phi'(theta) theta_dot with the 1/sqrt(x) of phi' cancelled.
  const double phi_dot =
      16.0 * p.phi0 / (kPi * kPi * p.v0) * (0.5 * (complement - theta)) * std::sqrt(x);
  double drive;  // theta_dot * cot(phi)
  if (x < kEndpointProduct) {
    drive = endpoint_limit(x, p);
  } else {
    const double theta_dot = 4.0 / (kPi * p.v0) * x;
    drive = theta_dot / std::tan(phi_from_product(x, p.phi0));
  }
  const double s = std::sin(theta);
  const double c = std::sin(complement);
  return {2.0 * (-drive * s - phi_dot * c), 2.0 * (drive * c - phi_dot * s)};
}

}  // namespace detail

EulerTrajectory build_trajectory(const TrackingParams& p) {
  p.validate();
  EulerTrajectory traj;
  traj.params = p;
  traj.t = uniform_grid(0.0, p.T, p.n_grid);
  const std::size_t n = traj.t.size();
  traj.theta.resize(n);
  traj.phi.resize(n);
  traj.theta_dot.resize(n);
  traj.phi_dot.resize(n);
  std::vector<double> eta_rate(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double theta = theta_of_t(traj.t[k], p);
    const double x = ramp_product(theta, kPi / 2 - theta);
    const EulerRates rates = rates_of_theta(theta, p);
    traj.theta[k] = theta;
    traj.phi[k] = phi_from_product(x, p.phi0);
    traj.theta_dot[k] = rates.theta_dot;
    traj.phi_dot[k] = rates.phi_dot;
    eta_rate[k] = x < kEndpointProduct ? endpoint_limit(x, p)
                                       : rates.theta_dot / std::sin(traj.phi[k]);
    if (!std::isfinite(eta_rate[k]) || !std::isfinite(rates.phi_dot)) {
      throw NumericalError("build_trajectory: non-finite rate at sample " + std::to_string(k));
    }
  }

  traj.eta = cumulative_trapezoid<double>(eta_rate, traj.step());
  for (double& e : traj.eta) e = -e;
  return traj;
}

PulsePair synthesize_fields(const EulerTrajectory& traj) {
  const std::size_t n = traj.size();
  std::vector<double> pump(n), stokes(n);
  for (std::size_t k = 0; k < n; ++k) {
    const FieldPair f = detail::shaped_fields(traj.theta[k], kPi / 2 - traj.theta[k], traj.params);
    if (!std::isfinite(f.pump) || !std::isfinite(f.stokes)) {
      throw NumericalError("synthesize_fields: non-finite field at sample " + std::to_string(k));
    }
    pump[k] = f.pump;
    stokes[k] = f.stokes;
  }
  return PulsePair(traj.params, traj.t, std::move(pump), std::move(stokes));
}

LRBasis lr_basis(double theta, double phi, double eta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double ce = std::cos(eta), se = std::sin(eta);
  LRBasis b;
  b.phi1 << cp * ct, kI * sp, cp * st;
  b.psi_plus << kI * (ce * sp * ct - se * st), ce * cp, kI * (ce * sp * st + se * ct);
  b.psi_minus << -se * sp * ct - ce * st, kI * se * cp, -se * sp * st + ce * ct;
  return b;
}

double excited_population(double phi) {
  const double s = std::sin(phi);
  return s * s;
}

AdiabaticBasis adiabatic_basis(double pump, double stokes) {
  const double rabi = std::hypot(pump, stokes);
  if (!(rabi > 0.0)) throw DomainError("adiabatic_basis: mixing angle undefined at zero field");
  const double s = pump / rabi;
  const double c = stokes / rabi;
  const double r = 1.0 / std::sqrt(2.0);
  AdiabaticBasis b;
  b.dark << c, 0.0, -s;
  b.bright_plus << r * s, r, r * c;
  b.bright_minus << r * s, -r, r * c;
  b.mixing_angle = std::atan2(pump, stokes);
  return b;
}

}  // namespace stirep
