#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "stirep/params.hpp"
#include "stirep/pulses.hpp"

namespace stirep {

/// Euler angles of the single-mode invariant eigenvector sampled on the
/// uniform grid, plus the phase eta = -int theta_dot / sin(phi).
struct EulerTrajectory {
  TrackingParams params;
  std::vector<double> t;
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> theta_dot;
  std::vector<double> phi_dot;
  std::vector<double> eta;

  std::size_t size() const { return t.size(); }
  double step() const { return t[1] - t[0]; }
};

/// Columns of the exact propagator in the Euler-angle representation.
/// phi1 carries the whole single-mode dynamics.
struct LRBasis {
  Eigen::Vector3cd phi1;
  Eigen::Vector3cd psi_plus;
  Eigen::Vector3cd psi_minus;
};

/// Instantaneous eigenvectors of the resonant Hamiltonian.
struct AdiabaticBasis {
  Eigen::Vector3d dark;
  Eigen::Vector3d bright_plus;
  Eigen::Vector3d bright_minus;
  double mixing_angle = 0.0;
};

struct EulerRates {
  double theta_dot = 0.0;
  double phi_prime = 0.0;  // d phi / d theta; zero at the singular endpoints
  double phi_dot = 0.0;
  bool endpoint = false;   // theta at 0 or pi/2, rates from the analytic limit
};

double theta_of_t(double t, const TrackingParams& p);

/// Throws DomainError for theta outside [0, pi/2].
double phi_of_theta(double theta, double phi0);

EulerRates rates_of_theta(double theta, const TrackingParams& p);

EulerTrajectory build_trajectory(const TrackingParams& p);

/// Pump and Stokes fields from the Euler angles of a tracking trajectory.
PulsePair synthesize_fields(const EulerTrajectory& traj);

LRBasis lr_basis(double theta, double phi, double eta);

/// Excited-state population of the single-mode solution, sin^2(phi).
double excited_population(double phi);

/// Throws DomainError when both fields vanish.
AdiabaticBasis adiabatic_basis(double pump, double stokes);

namespace detail {

// Field components evaluated from theta and its complement pi/2 - theta.
// Passing the complement separately keeps theta (pi/2 - theta) accurate at
// the far end of the ramp.
FieldPair shaped_fields(double theta, double complement, const TrackingParams& p);

}  // namespace detail

}  // namespace stirep
