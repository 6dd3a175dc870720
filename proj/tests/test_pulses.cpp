#include <doctest.h>

#include <cmath>
#include <vector>

#include "stirep/common.hpp"
#include "stirep/pulses.hpp"
#include "stirep/quadrature.hpp"

using namespace stirep;

TEST_SUITE("pulses") {
  TEST_CASE("Gaussian closed form and delay convention") {
    const GaussianParams g{200.0, 0.05, 0.04, 1.0};
    const FieldPair mid = eval_gaussian(g, 0.5);
    const double expected = 200.0 * std::exp(-std::pow(0.025 / 0.04, 2));
    CHECK(mid.pump == doctest::Approx(-expected));
    CHECK(mid.stokes == doctest::Approx(expected));
    // tau > 0: the Stokes pulse peaks at T/2 - tau/2, before the pump at T/2 + tau/2
    CHECK(eval_gaussian(g, 0.475).stokes == doctest::Approx(200.0));
    CHECK(eval_gaussian(g, 0.525).pump == doctest::Approx(-200.0));
  }

  TEST_CASE("Gaussian pulse areas") {
    const GaussianParams g{150.0, 0.1, 0.04, 1.0};
    const PulsePair pp = sample_gaussian(g, 8001);
    const PulseAreas a = pulse_areas(pp);
    const double single = 150.0 * 0.04 * std::sqrt(kPi);
    CHECK(a.pump == doctest::Approx(-single).epsilon(1e-9));
    CHECK(a.stokes == doctest::Approx(single).epsilon(1e-9));
  }

  TEST_CASE("Gaussian with tau = 0 has mirror areas") {
    const PulseAreas a = pulse_areas(sample_gaussian(GaussianParams{80.0, 0.0, 0.04, 1.0}));
    CHECK(a.pump == doctest::Approx(-a.stokes).epsilon(1e-14));
  }

  TEST_CASE("non-overlapping Gaussians: generalized area is the sum of single areas") {
    const PulsePair pp = sample_gaussian(GaussianParams{100.0, 0.4, 0.04, 1.0}, 8001);
    CHECK(generalized_area(pp) == doctest::Approx(2 * 100.0 * 0.04 * std::sqrt(kPi)).epsilon(1e-8));
  }

  TEST_CASE("generalized area is invariant under tau -> -tau") {
    for (double tau : {0.02, 0.05, 0.13}) {
      const double a = generalized_area(sample_gaussian(GaussianParams{300.0, tau, 0.04, 1.0}));
      const double b = generalized_area(sample_gaussian(GaussianParams{300.0, -tau, 0.04, 1.0}));
      CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
  }

  TEST_CASE("tau -> -tau swaps the pulse ordering") {
    const GaussianParams g{100.0, 0.08, 0.04, 1.0};
    GaussianParams swapped = g;
    swapped.delay = -g.delay;
    for (double t : {0.3, 0.46, 0.5, 0.61}) {
      CHECK(eval_gaussian(g, t).stokes == doctest::Approx(-eval_gaussian(swapped, t).pump));
    }
  }

  TEST_CASE("adiabatically optimised closed form") {
    const AdiabOptParams p = AdiabOptParams::opt2(400.0);
    const FieldPair mid = eval_adiabopt(p, 0.5);
    // f = 2 at the centre: the mixing angle is pi/4
    CHECK(mid.pump == doctest::Approx(-400.0 * std::sin(kPi / 4)));
    CHECK(mid.stokes == doctest::Approx(400.0 * std::cos(kPi / 4)));
    const double th = 0.03;
    const double env = 400.0 * std::exp(-std::pow(th / 0.04, 4));
    const double f = 1 + std::exp(-5.0 * th / 0.04);
    const FieldPair late = eval_adiabopt(p, 0.5 + th);
    CHECK(late.pump == doctest::Approx(-env * std::sin(kPi / (2 * f))));
    CHECK(late.stokes == doctest::Approx(env * std::cos(kPi / (2 * f))));
  }

  TEST_CASE("presets") {
    const AdiabOptParams a = AdiabOptParams::opt1(1.0);
    CHECK(a.waist_factor == 1.0);
    CHECK(a.power == 1);
    CHECK(a.switch_rate == 4.0);
    const AdiabOptParams b = AdiabOptParams::opt2(1.0);
    CHECK(b.power == 2);
    CHECK(b.switch_rate == 5.0);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((GaussianParams{-1.0, 0.0, 0.04, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((GaussianParams{1.0, 0.0, 0.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((GaussianParams{1.0, NAN, 0.04, 1.0}.validate()), DomainError);
    AdiabOptParams p = AdiabOptParams::opt1(1.0);
    p.power = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = AdiabOptParams::opt1(1.0);
    p.switch_rate = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = AdiabOptParams::opt1(1.0);
    p.waist_factor = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
  }

  TEST_CASE("boundary check examples") {
    CHECK(boundary_check(sample_gaussian(GaussianParams{100.0, 0.1, 0.04, 1.0})).pass);
    const BoundaryReport wide = boundary_check(sample_gaussian(GaussianParams{100.0, 0.0, 0.3, 1.0}));
    CHECK_FALSE(wide.pass);
    // edge amplitude over the peak Rabi frequency sqrt(P^2 + S^2) = sqrt(2) peak at tau = 0
    CHECK(wide.max_ratio == doctest::Approx(std::exp(-std::pow(0.5 / 0.3, 2)) / std::sqrt(2.0)).epsilon(1e-6));
    const BoundaryReport zero = boundary_check(sample_gaussian(GaussianParams{0.0, 0.1, 0.04, 1.0}));
    CHECK(zero.pass);
    CHECK(zero.max_ratio == 0.0);
    CHECK(boundary_check(eval_shaped(TrackingParams{})).pass);
  }

  TEST_CASE("PulsePair construction is validated") {
    const std::vector<double> t{0.0, 0.5, 1.0};
    const std::vector<double> f{0.0, 1.0, 0.0};
    CHECK_NOTHROW(PulsePair(GaussianParams{}, t, f, f));
    CHECK_THROWS_AS(PulsePair(GaussianParams{}, t, {0.0, 1.0}, f), DomainError);
    CHECK_THROWS_AS(PulsePair(GaussianParams{}, {0.0, 0.3, 1.0}, f, f), DomainError);
    CHECK_THROWS_AS(PulsePair(GaussianParams{}, {0.0}, {0.0}, {0.0}), DomainError);
  }

  TEST_CASE("PulsePair::at evaluates the closed form off-grid") {
    const GaussianParams g{250.0, 0.05, 0.04, 1.0};
    const PulsePair pp = sample_gaussian(g, 101);
    CHECK(pp.family() == PulseFamily::Gaussian);
    CHECK(to_string(pp.family()) == "gaussian");
    const double t = 0.4937;
    CHECK(pp.at(t).pump == doctest::Approx(eval_gaussian(g, t).pump));
    CHECK(pp.at(t).stokes == doctest::Approx(eval_gaussian(g, t).stokes));
    CHECK(pp.at(pp.t()[37]).pump == doctest::Approx(pp.pump()[37]));

    const TrackingParams s{};
    const PulsePair shaped = eval_shaped(s);
    CHECK(shaped.family() == PulseFamily::Shaped);
    CHECK(shaped.at(0.5123).stokes == doctest::Approx(eval_shaped_at(s, 0.5123).stokes));
  }

  TEST_CASE("shaped family: generalized area decreases as phi0 grows") {
    double previous = INFINITY;
    for (double phi0 = 0.05; phi0 < 0.6; phi0 += 0.05) {
      const double area = generalized_area(eval_shaped(TrackingParams{phi0, 0.028, 1.0, 2001}));
      CHECK(area < previous);
      previous = area;
    }
  }

  TEST_CASE("shaped family: golden-point generalized area") {
    const double area = generalized_area(eval_shaped(TrackingParams{}));
    CHECK(area / kPi == doctest::Approx(12.23).epsilon(0.005));
  }

  TEST_CASE("shaped pump and Stokes areas are antisymmetric") {
    const PulseAreas a = pulse_areas(eval_shaped(TrackingParams{}));
    CHECK(a.pump < 0.0);
    CHECK(a.pump == doctest::Approx(-a.stokes).epsilon(1e-9));
  }
}
