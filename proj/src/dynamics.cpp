#include "stirep/dynamics.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "stirep/common.hpp"
#include "stirep/invariant.hpp"

namespace stirep {
namespace {

using cd = std::complex<double>;
constexpr cd kMinusHalfI{0.0, -0.5};

// d psi / dt = -i H psi for the tridiagonal Lambda Hamiltonian.
QuantumState rate(const FieldPair& f, double scale, const QuantumState& y) {
  const double p = scale * f.pump;
  const double s = scale * f.stokes;
  return QuantumState(kMinusHalfI * p * y(1), kMinusHalfI * (p * y(0) + s * y(2)),
                      kMinusHalfI * s * y(1));
}

QuantumState rk4(const QuantumState& y, double h, double scale, const FieldPair& f0,
                 const FieldPair& fm, const FieldPair& f1) {
  const QuantumState k1 = rate(f0, scale, y);
  const QuantumState k2 = rate(fm, scale, y + 0.5 * h * k1);
  const QuantumState k3 = rate(fm, scale, y + 0.5 * h * k2);
  const QuantumState k4 = rate(f1, scale, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct Trial {
  QuantumState value;
  double error;
};

// One full step against two half steps; the difference estimates the error
// of the half-step result, which is then extrapolated.
Trial richardson(const QuantumState& y, double h, double scale, const FieldPair* q) {
  const QuantumState full = rk4(y, h, scale, q[0], q[2], q[4]);
  const QuantumState mid = rk4(y, 0.5 * h, scale, q[0], q[1], q[2]);
  const QuantumState half = rk4(mid, 0.5 * h, scale, q[2], q[3], q[4]);
  const QuantumState diff = (half - full) / 15.0;
  return {half + diff, diff.norm()};
}

double p3_of_normalized(const QuantumState& psi) {
  const double n2 = psi.squaredNorm();
  return std::norm(psi(2)) / n2;
}

}  // namespace

Eigen::Matrix3d hamiltonian(double pump, double stokes, double rho) {
  const double a = 0.5 * (1.0 + rho);
  Eigen::Matrix3d h;
  h << 0.0, a * pump, 0.0, a * pump, 0.0, a * stokes, 0.0, a * stokes, 0.0;
  return h;
}

Propagator::Propagator(const PulsePair& pulses, PropagationOptions options)
    : pulses_(pulses), options_(options) {
  if (!(options_.tol > 0.0)) throw DomainError("propagate: tol must be positive");
  const std::size_t intervals = pulses_.size() - 1;
  const double h = pulses_.step();
  quarter_.resize(4 * intervals + 1);
  for (std::size_t k = 0; k < intervals; ++k) {
    const double t0 = pulses_.t()[k];
    quarter_[4 * k] = {pulses_.pump()[k], pulses_.stokes()[k]};
    for (int j = 1; j < 4; ++j) quarter_[4 * k + j] = pulses_.at(t0 + 0.25 * j * h);
  }
  quarter_.back() = {pulses_.pump().back(), pulses_.stokes().back()};
  for (const FieldPair& f : quarter_) {
    if (!std::isfinite(f.pump) || !std::isfinite(f.stokes)) {
      throw NumericalError("propagate: non-finite field value");
    }
  }
}

QuantumState Propagator::refine(double t0, double h, double rho, const QuantumState& psi,
                                int depth, Stats& stats) const {
  if (depth > options_.max_refinements) {
    throw NumericalError("propagate: step size underflow near t = " + std::to_string(t0));
  }
  ++stats.refined;
  const double half = 0.5 * h;
  QuantumState y = psi;
  for (int part = 0; part < 2; ++part) {
    const double start = t0 + part * half;
    FieldPair q[5];
    for (int j = 0; j < 5; ++j) q[j] = pulses_.at(start + 0.25 * j * half);
    const Trial trial = richardson(y, half, 1.0 + rho, q);
    if (trial.error <= options_.tol) {
      stats.max_error = std::max(stats.max_error, trial.error);
      y = trial.value;
    } else {
      y = refine(start, half, rho, y, depth + 1, stats);
    }
  }
  return y;
}

QuantumState Propagator::advance(std::size_t interval, double rho, const QuantumState& psi,
                                 Stats& stats) const {
  const Trial trial = richardson(psi, pulses_.step(), 1.0 + rho, &quarter_[4 * interval]);
  QuantumState next;
  if (trial.error <= options_.tol) {
    stats.max_error = std::max(stats.max_error, trial.error);
    next = trial.value;
  } else {
    next = refine(pulses_.t()[interval], pulses_.step(), rho, psi, 1, stats);
  }
  const double norm = next.norm();
  if (!std::isfinite(norm)) throw NumericalError("propagate: non-finite state");
  const double drift = std::abs(norm - 1.0);
  stats.max_drift = std::max(stats.max_drift, drift);
  if (drift > options_.norm_drift) {
    next /= norm;
    ++stats.renormalizations;
  }
  return next;
}

PropagationResult Propagator::run(double rho, const QuantumState& psi0) const {
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw DomainError("propagate: initial state not normalised");
  const std::size_t n = pulses_.size();
  PropagationResult result;
  result.t.assign(pulses_.t().begin(), pulses_.t().end());
  result.states.reserve(n);
  result.populations.reserve(n);
  Stats stats;
  QuantumState psi = psi0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) psi = advance(k - 1, rho, psi, stats);
    result.states.push_back(psi);
    result.populations.push_back({std::norm(psi(0)), std::norm(psi(1)), std::norm(psi(2))});
  }
  result.fidelity = p3_of_normalized(psi);
  result.infidelity = (std::norm(psi(0)) + std::norm(psi(1))) / psi.squaredNorm();
  result.renormalizations = stats.renormalizations;
  result.refined_intervals = stats.refined;
  result.max_norm_drift = stats.max_drift;
  result.max_local_error = stats.max_error;
  result.projections = project_adiabatic(result, pulses_);
  return result;
}

double Propagator::infidelity(double rho) const {
  Stats stats;
  QuantumState psi = ground_state();
  for (std::size_t k = 0; k + 1 < pulses_.size(); ++k) psi = advance(k, rho, psi, stats);
  return (std::norm(psi(0)) + std::norm(psi(1))) / psi.squaredNorm();
}

PropagationResult propagate(const PulsePair& pulses, double rho, const QuantumState& psi0,
                            const PropagationOptions& options) {
  return Propagator(pulses, options).run(rho, psi0);
}

std::vector<std::optional<AdiabaticProjection>> project_adiabatic(const PropagationResult& result,
                                                                  const PulsePair& pulses) {
  if (result.states.size() != pulses.size()) {
    throw DomainError("project_adiabatic: result and pulses are on different grids");
  }
  const std::size_t n = pulses.size();
  std::vector<std::optional<AdiabaticProjection>> out(n);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double p = pulses.pump()[k];
    const double s = pulses.stokes()[k];
    if (std::hypot(p, s) == 0.0) continue;
    const AdiabaticBasis basis = adiabatic_basis(p, s);
    const QuantumState& psi = result.states[k];
    auto overlap = [&psi](const Eigen::Vector3d& v) {
      return std::norm(v(0) * psi(0) + v(1) * psi(1) + v(2) * psi(2));
    };
    out[k] = AdiabaticProjection{overlap(basis.dark), overlap(basis.bright_plus),
                                 overlap(basis.bright_minus)};
  }
  return out;
}

}  // namespace stirep
