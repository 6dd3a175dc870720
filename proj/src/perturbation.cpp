#include "stirep/perturbation.hpp"

#include <cmath>
#include <initializer_list>

#include "stirep/common.hpp"
#include "stirep/dynamics.hpp"
#include "stirep/parallel.hpp"
#include "stirep/quadrature.hpp"

namespace stirep {
namespace {

constexpr double kStructureRel = 1e-8;
constexpr double kStructureAbs = 1e-14;

using Series = std::vector<Complex>;

Series times(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

// Running integral of a(t) * inner(t).
Series layer(const Series& a, const Series& inner, double h) {
  return cumulative_trapezoid<Complex>(times(a, inner), h);
}

// Time-ordered integral of f1(t) f2(t') ... fk(t^(k-1)) over t > t' > ...,
// with f1 at the latest time.
Complex chain(std::initializer_list<const Series*> factors, double h) {
  auto it = std::rbegin(factors);
  Series acc = cumulative_trapezoid<Complex>(**it, h);
  for (++it; it != std::rend(factors); ++it) acc = layer(**it, acc, h);
  return acc.back();
}

}  // namespace

bool is_real(Complex z) {
  return std::abs(z.imag()) <= std::max(kStructureRel * std::abs(z), kStructureAbs);
}

bool is_imaginary(Complex z) {
  return std::abs(z.real()) <= std::max(kStructureRel * std::abs(z), kStructureAbs);
}

DeviationElements deviation_elements(const EulerTrajectory& traj, const PulsePair& pulses) {
  if (traj.size() != pulses.size()) throw DomainError("deviation_elements: grid size mismatch");
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (std::abs(traj.t[k] - pulses.t()[k]) > 1e-12 * traj.params.T) {
      throw DomainError("deviation_elements: time grids differ");
    }
  }
  DeviationElements d;
  d.t = traj.t;
  d.m.resize(traj.size());
  d.n.resize(traj.size());
  d.r.resize(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const Eigen::Matrix3cd h = hamiltonian(pulses.pump()[k], pulses.stokes()[k]).cast<Complex>();
    const LRBasis b = lr_basis(traj.theta[k], traj.phi[k], traj.eta[k]);
    const Eigen::Vector3cd h_plus = h * b.psi_plus;
    const Eigen::Vector3cd h_minus = h * b.psi_minus;
    d.m[k] = b.phi1.dot(h_plus);
    d.n[k] = b.phi1.dot(h_minus);
    d.r[k] = b.psi_plus.dot(h_minus);
  }
  return d;
}

InfidelityOrders order_integrals(const DeviationElements& d) {
  const double h = d.step();
  const Series* m = &d.m;
  const Series* n = &d.n;
  const Series* r = &d.r;

  InfidelityOrders o;
  o.O2 = chain({m, m}, h) - chain({n, n}, h);
  o.O3 = chain({n, r, m}, h) - chain({m, r, n}, h);
  o.O4 = chain({m, m, m, m}, h) - chain({m, m, n, n}, h) + chain({m, r, r, m}, h) -
         chain({n, n, m, m}, h) + chain({n, n, n, n}, h) - chain({n, r, r, n}, h);

  for (Complex z : {o.O2, o.O3, o.O4}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("order_integrals: non-finite accumulation");
    }
  }
  o.Otilde2 = -2.0 * o.O2.real();
  o.Otilde3 = -2.0 * o.O3.imag();
  o.Otilde4 = 2.0 * o.O4.real() + o.O2.real() * o.O2.real();
  return o;
}

InfidelityOrders infidelity_orders(const TrackingParams& p) {
  const EulerTrajectory traj = build_trajectory(p);
  return order_integrals(deviation_elements(traj, synthesize_fields(traj)));
}

std::vector<OrdersRow> orders_vs_phi0(std::span<const double> phi0_grid, const TrackingParams& base) {
  return parallel_map<OrdersRow>(phi0_grid.size(), [&](std::size_t i) {
    TrackingParams p = base;
    p.phi0 = phi0_grid[i];
    const EulerTrajectory traj = build_trajectory(p);
    const PulsePair pulses = synthesize_fields(traj);
    const InfidelityOrders o = order_integrals(deviation_elements(traj, pulses));
    OrdersRow row;
    row.phi0 = p.phi0;
    row.area = generalized_area(pulses);
    row.Otilde2 = o.Otilde2;
    row.Otilde3 = o.Otilde3;
    row.Otilde4 = o.Otilde4;
    row.p2_max = excited_population(p.phi0);
    return row;
  });
}

}  // namespace stirep
