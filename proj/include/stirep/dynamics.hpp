#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "stirep/pulses.hpp"

namespace stirep {

/// Amplitudes (c1, c2, c3) on the bare basis {|1>, |2>, |3>}.
using QuantumState = Eigen::Vector3cd;

inline QuantumState ground_state() { return QuantumState(1.0, 0.0, 0.0); }

/// Resonant Lambda Hamiltonian (hbar = 1) with both Rabi frequencies scaled
/// by (1 + rho).
Eigen::Matrix3d hamiltonian(double pump, double stokes, double rho = 0.0);

struct PropagationOptions {
  double tol = 1e-10;          // local error bound per grid interval
  int max_refinements = 16;    // halvings of one interval before giving up
  double norm_drift = 1e-10;   // renormalise only beyond this drift
};

struct AdiabaticProjection {
  double dark = 0.0;
  double plus = 0.0;
  double minus = 0.0;
};

struct PropagationResult {
  std::vector<double> t;
  std::vector<QuantumState> states;
  std::vector<std::array<double, 3>> populations;
  // Empty where the mixing angle is undefined (zero field).
  std::vector<std::optional<AdiabaticProjection>> projections;
  double fidelity = 0.0;    // P3 of the normalised final state
  double infidelity = 1.0;
  std::size_t renormalizations = 0;
  std::size_t refined_intervals = 0;
  double max_norm_drift = 0.0;    // largest per-interval |norm - 1| before any fix
  double max_local_error = 0.0;   // largest accepted error estimate
};

/// Fixed-grid RK4 propagator with Richardson step-doubling control. Field
/// values at the RK4 stage times are evaluated once from the closed-form
/// family, so repeated runs at different rho only redo the linear algebra.
class Propagator {
 public:
  explicit Propagator(const PulsePair& pulses, PropagationOptions options = {});

  PropagationResult run(double rho, const QuantumState& psi0) const;

  /// Final infidelity 1 - P3(t_f) starting from |1>, without storing states.
  double infidelity(double rho) const;

  const PulsePair& pulses() const { return pulses_; }

 private:
  struct Stats {
    std::size_t renormalizations = 0;
    std::size_t refined = 0;
    double max_drift = 0.0;
    double max_error = 0.0;
  };

  QuantumState advance(std::size_t interval, double rho, const QuantumState& psi, Stats& stats) const;
  QuantumState refine(double t0, double h, double rho, const QuantumState& psi, int depth,
                      Stats& stats) const;

  PulsePair pulses_;
  PropagationOptions options_;
  std::vector<FieldPair> quarter_;  // fields at t_k + j h / 4
};

PropagationResult propagate(const PulsePair& pulses, double rho, const QuantumState& psi0,
                            const PropagationOptions& options = {});

/// Squared overlaps of each stored state with the instantaneous adiabatic
/// states; endpoint or zero-field samples are left empty.
std::vector<std::optional<AdiabaticProjection>> project_adiabatic(const PropagationResult& result,
                                                                  const PulsePair& pulses);

}  // namespace stirep
