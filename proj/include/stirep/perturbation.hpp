#pragma once

#include <complex>
#include <span>
#include <vector>

#include "stirep/invariant.hpp"
#include "stirep/pulses.hpp"

namespace stirep {

using Complex = std::complex<double>;

/// Off-diagonal couplings of H (unit rho) in the propagator-column basis:
/// m = <phi1|H|psi+>, n = <phi1|H|psi->, r = <psi+|H|psi->.
struct DeviationElements {
  std::vector<double> t;
  std::vector<Complex> m;
  std::vector<Complex> n;
  std::vector<Complex> r;

  double step() const { return t[1] - t[0]; }
};

/// Nested-integral coefficients of the transfer amplitude and the derived
/// infidelity orders, with rho factored out.
///
/// O2, O3 and O4 are the time-ordered integrals of the path products written
/// without the (-i)^k factor of the Dyson series, so O2 and O4 come out real
/// and O3 imaginary. The amplitude is 1 + sum_k (-i rho)^k O_k, which gives
///   F = 1 + Ot2 rho^2 + Ot3 rho^3 + Ot4 rho^4 + O(rho^5)
/// with Ot2 = -2 O2, Ot3 = -2 Im O3 and Ot4 = 2 O4 + O2^2.
struct InfidelityOrders {
  Complex O2;
  Complex O3;
  Complex O4;
  double Otilde2 = 0.0;
  double Otilde3 = 0.0;
  double Otilde4 = 0.0;
};

/// True when |Im z| is within 1e-8 of |z| (floored at 1e-14 absolute).
bool is_real(Complex z);
/// True when |Re z| is within 1e-8 of |z| (floored at 1e-14 absolute).
bool is_imaginary(Complex z);

DeviationElements deviation_elements(const EulerTrajectory& traj, const PulsePair& pulses);

/// Evaluates the nested integrals as chains of running trapezoid integrals,
/// linear in the grid size for every order.
InfidelityOrders order_integrals(const DeviationElements& d);

InfidelityOrders infidelity_orders(const TrackingParams& p);

struct OrdersRow {
  double phi0 = 0.0;
  double area = 0.0;  // generalized area, rad
  double Otilde2 = 0.0;
  double Otilde3 = 0.0;
  double Otilde4 = 0.0;
  double p2_max = 0.0;
};

/// One row per phi0; everything except phi0 is taken from `base`.
std::vector<OrdersRow> orders_vs_phi0(std::span<const double> phi0_grid, const TrackingParams& base);

}  // namespace stirep
