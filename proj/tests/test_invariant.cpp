#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "stirep/common.hpp"
#include "stirep/invariant.hpp"
#include "stirep/pulses.hpp"

using namespace stirep;

namespace {
const TrackingParams kGolden{};  // phi0 = 0.12815, v0 = 0.028 T
}

TEST_SUITE("invariant") {
  TEST_CASE("theta_of_t: midpoint, endpoint and odd symmetry") {
    CHECK(theta_of_t(0.5, kGolden) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(theta_of_t(0.0, kGolden) <= 1e-10);
    CHECK(theta_of_t(0.0, kGolden) >= 0.0);
    for (double s : {0.01, 0.1, 0.3, 0.5}) {
      CHECK(theta_of_t(0.5 + s, kGolden) + theta_of_t(0.5 - s, kGolden) ==
            doctest::Approx(kPi / 2).epsilon(1e-15));
    }
    CHECK(kPi / 2 - theta_of_t(1.0, kGolden) <= 1e-10);
  }

  TEST_CASE("theta_of_t agrees with the hyperbolic-tangent form") {
    for (double t : {0.2, 0.45, 0.5, 0.52, 0.8}) {
      const double expected = (kPi / 4) * (std::tanh((t - 0.5) / kGolden.v0) + 1.0);
      CHECK(theta_of_t(t, kGolden) == doctest::Approx(expected).epsilon(1e-14));
    }
  }

  TEST_CASE("phi_of_theta examples") {
    CHECK(phi_of_theta(kPi / 4, 0.12815) == doctest::Approx(0.12815).epsilon(1e-15));
    CHECK(phi_of_theta(0.0, 0.3) == 0.0);
    CHECK(phi_of_theta(kPi / 2, 0.3) == 0.0);
    const double expected = (4 * 0.12815 / kPi) * std::sqrt(kPi / 8 * 3 * kPi / 8);
    CHECK(phi_of_theta(kPi / 8, 0.12815) == doctest::Approx(expected).epsilon(1e-14));
  }

  TEST_CASE("phi_of_theta rejects theta outside [0, pi/2]") {
    CHECK_THROWS_AS(phi_of_theta(-1e-3, 0.1), DomainError);
    CHECK_THROWS_AS(phi_of_theta(kPi / 2 + 1e-3, 0.1), DomainError);
  }

  TEST_CASE("rates_of_theta matches the closed forms and the chain rule") {
    const double theta = kPi / 8;
    const EulerRates r = rates_of_theta(theta, kGolden);
    const double x = theta * (kPi / 2 - theta);
    CHECK(r.theta_dot == doctest::Approx(4.0 / (kPi * kGolden.v0) * x).epsilon(1e-14));
    CHECK(r.phi_prime ==
          doctest::Approx(4 * kGolden.phi0 / kPi * (kPi / 4 - theta) / std::sqrt(x)).epsilon(1e-14));
    CHECK(r.phi_dot == doctest::Approx(r.phi_prime * r.theta_dot).epsilon(1e-14));
    CHECK_FALSE(r.endpoint);

    const EulerRates mid = rates_of_theta(kPi / 4, kGolden);
    CHECK(std::abs(mid.phi_prime) < 1e-15);
    CHECK(mid.theta_dot == doctest::Approx(kPi / (4 * kGolden.v0)).epsilon(1e-14));
  }

  TEST_CASE("rates_of_theta: numerical derivative of phi_of_theta") {
    const double theta = 0.3;
    const double d = 1e-6;
    const double fd = (phi_of_theta(theta + d, kGolden.phi0) - phi_of_theta(theta - d, kGolden.phi0)) / (2 * d);
    CHECK(rates_of_theta(theta, kGolden).phi_prime == doctest::Approx(fd).epsilon(1e-8));
  }

  TEST_CASE("rates_of_theta at the singular endpoints") {
    const EulerRates r0 = rates_of_theta(0.0, kGolden);
    CHECK(r0.endpoint);
    CHECK(r0.theta_dot == 0.0);
    CHECK(std::isfinite(r0.phi_dot));
  }

  TEST_CASE("tracking parameter validation") {
    CHECK_THROWS_AS((TrackingParams{0.0, 0.028, 1.0, 101}.validate()), DomainError);
    CHECK_THROWS_AS((TrackingParams{kPi / 2, 0.028, 1.0, 101}.validate()), DomainError);
    CHECK_THROWS_AS((TrackingParams{0.1, 0.0, 1.0, 101}.validate()), DomainError);
    CHECK_THROWS_AS((TrackingParams{0.1, 0.028, -1.0, 101}.validate()), DomainError);
    CHECK_THROWS_AS((TrackingParams{0.1, 0.028, 1.0, 1}.validate()), DomainError);
    CHECK_NOTHROW((TrackingParams{0.1, 0.028, 1.0, 2}.validate()));
  }

  TEST_CASE("trajectory invariants") {
    const EulerTrajectory traj = build_trajectory(kGolden);
    REQUIRE(traj.size() == kDefaultGrid);
    CHECK(traj.t.front() == 0.0);
    CHECK(traj.t.back() == doctest::Approx(1.0));
    CHECK(std::is_sorted(traj.theta.begin(), traj.theta.end()));
    CHECK(traj.theta.front() <= 1e-6);
    CHECK(kPi / 2 - traj.theta.back() <= 1e-6);
    CHECK(*std::min_element(traj.phi.begin(), traj.phi.end()) >= 0.0);
    CHECK(traj.phi.front() <= 1e-6);
    CHECK(traj.phi.back() <= 1e-6);
    const auto peak = std::max_element(traj.phi.begin(), traj.phi.end());
    CHECK(*peak == doctest::Approx(kGolden.phi0).epsilon(1e-14));
    CHECK(traj.theta[static_cast<std::size_t>(peak - traj.phi.begin())] ==
          doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(traj.eta.front() == 0.0);
  }

  TEST_CASE("eta is minus the running integral of theta_dot / sin(phi)") {
    const EulerTrajectory traj = build_trajectory(TrackingParams{0.3, 0.028, 1.0, 2001});
    const double h = traj.step();
    double acc = 0.0;
    for (std::size_t k = 1; k < traj.size(); ++k) {
      const auto integrand = [&](std::size_t j) {
        return traj.phi[j] > 0 ? traj.theta_dot[j] / std::sin(traj.phi[j]) : 0.0;
      };
      acc -= 0.5 * h * (integrand(k - 1) + integrand(k));
    }
    CHECK(traj.eta.back() == doctest::Approx(acc).epsilon(1e-6));
    CHECK(traj.eta.back() < 0.0);
  }

  TEST_CASE("Lewis-Riesenfeld basis is orthonormal along the trajectory") {
    const EulerTrajectory traj = build_trajectory(TrackingParams{0.4, 0.028, 1.0, 801});
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const LRBasis b = lr_basis(traj.theta[k], traj.phi[k], traj.eta[k]);
      worst = std::max({worst, std::abs(b.phi1.norm() - 1.0), std::abs(b.psi_plus.norm() - 1.0),
                        std::abs(b.psi_minus.norm() - 1.0), std::abs(b.phi1.dot(b.psi_plus)),
                        std::abs(b.phi1.dot(b.psi_minus)), std::abs(b.psi_plus.dot(b.psi_minus))});
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("phi1 boundary conditions: starts in |1>, ends in |3>") {
    const EulerTrajectory traj = build_trajectory(kGolden);
    const LRBasis first = lr_basis(traj.theta.front(), traj.phi.front(), traj.eta.front());
    const LRBasis last = lr_basis(traj.theta.back(), traj.phi.back(), traj.eta.back());
    CHECK(std::norm(first.phi1[0]) >= 1 - 1e-6);
    CHECK(std::norm(last.phi1[2]) >= 1 - 1e-6);
  }

  TEST_CASE("excited population is sin^2 phi") {
    CHECK(excited_population(0.12815) == doctest::Approx(0.016334).epsilon(1e-4));
    CHECK(excited_population(0.0) == 0.0);
  }

  TEST_CASE("synthesized fields are consistent with the closed form and counter-intuitive") {
    const EulerTrajectory traj = build_trajectory(kGolden);
    const PulsePair pp = synthesize_fields(traj);
    REQUIRE(pp.size() == traj.size());
    for (std::size_t k : {std::size_t{100}, std::size_t{1900}, std::size_t{2000}, std::size_t{2700}}) {
      const FieldPair f = eval_shaped_at(kGolden, pp.t()[k]);
      CHECK(f.pump == doctest::Approx(pp.pump()[k]).epsilon(1e-12));
      CHECK(f.stokes == doctest::Approx(pp.stokes()[k]).epsilon(1e-12));
    }
    CHECK(boundary_check(pp).pass);
    const auto abs_less = [](double a, double b) { return std::abs(a) < std::abs(b); };
    const auto stokes_peak = std::max_element(pp.stokes().begin(), pp.stokes().end(), abs_less);
    const auto pump_peak = std::max_element(pp.pump().begin(), pp.pump().end(), abs_less);
    CHECK(stokes_peak - pp.stokes().begin() < pump_peak - pp.pump().begin());
  }

  TEST_CASE("shaped fields reproduce the Euler-angle rates (inverse engineering)") {
    // From the dynamics: theta_dot = -(P sin(theta) - S cos(theta)) tan(phi)/2 and
    // phi_dot = -(P cos(theta) + S sin(theta))/2.
    const EulerTrajectory traj = build_trajectory(TrackingParams{0.25, 0.028, 1.0, 1001});
    const PulsePair pp = synthesize_fields(traj);
    for (std::size_t k = 200; k < 800; k += 50) {
      const double P = pp.pump()[k];
      const double S = pp.stokes()[k];
      const double th = traj.theta[k];
      CHECK(-0.5 * (P * std::cos(th) + S * std::sin(th)) == doctest::Approx(traj.phi_dot[k]).epsilon(1e-10));
      CHECK(0.5 * (S * std::cos(th) - P * std::sin(th)) * std::tan(traj.phi[k]) ==
            doctest::Approx(traj.theta_dot[k]).epsilon(1e-10));
    }
  }

  TEST_CASE("adiabatic basis: dark state annihilated by the Hamiltonian coupling") {
    const AdiabaticBasis b = adiabatic_basis(-3.0, 4.0);
    CHECK(b.dark.norm() == doctest::Approx(1.0));
    CHECK(b.bright_plus.norm() == doctest::Approx(1.0));
    CHECK(b.bright_minus.norm() == doctest::Approx(1.0));
    CHECK(std::abs(b.dark.dot(b.bright_plus)) < 1e-14);
    CHECK(std::abs(b.dark.dot(b.bright_minus)) < 1e-14);
    CHECK(std::abs(b.bright_plus.dot(b.bright_minus)) < 1e-14);
    // the dark state has no |2> component and is orthogonal to P|1> + S|3>
    CHECK(std::abs(b.dark[1]) < 1e-15);
    CHECK(std::abs(-3.0 * b.dark[0] + 4.0 * b.dark[2]) < 1e-14);
    CHECK_THROWS_AS(adiabatic_basis(0.0, 0.0), DomainError);
  }
}
