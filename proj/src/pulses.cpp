#include "stirep/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stirep/common.hpp"
#include "stirep/invariant.hpp"
#include "stirep/quadrature.hpp"

namespace stirep {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <typename Params, typename Eval>
PulsePair sample(const Params& p, std::size_t n_grid, Eval eval) {
  p.validate();
  std::vector<double> t = uniform_grid(0.0, p.T, n_grid);
  std::vector<double> pump(t.size()), stokes(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const FieldPair f = eval(p, t[k]);
    pump[k] = f.pump;
    stokes[k] = f.stokes;
  }
  return PulsePair(p, std::move(t), std::move(pump), std::move(stokes));
}

}  // namespace

std::string_view to_string(PulseFamily family) {
  switch (family) {
    case PulseFamily::Shaped: return "shaped";
    case PulseFamily::Gaussian: return "gaussian";
    case PulseFamily::AdiabOpt: return "adiabopt";
  }
  return "unknown";
}

// A zero peak is accepted as the degenerate no-field pair.
void GaussianParams::validate() const {
  if (!(peak >= 0.0) || !std::isfinite(peak)) throw DomainError("gaussian: peak must be >= 0");
  if (!(sigma > 0.0)) throw DomainError("gaussian: sigma must be positive");
  if (!(T > 0.0)) throw DomainError("gaussian: T must be positive");
  if (!std::isfinite(delay)) throw DomainError("gaussian: delay must be finite");
}

void AdiabOptParams::validate() const {
  if (!(peak >= 0.0) || !std::isfinite(peak)) throw DomainError("adiabopt: peak must be >= 0");
  if (!(sigma > 0.0)) throw DomainError("adiabopt: sigma must be positive");
  if (!(waist_factor > 0.0)) throw DomainError("adiabopt: waist factor m must be positive");
  if (power < 1) throw DomainError("adiabopt: power n must be at least 1");
  if (!(switch_rate > 0.0)) throw DomainError("adiabopt: switch rate lambda must be positive");
  if (!(T > 0.0)) throw DomainError("adiabopt: T must be positive");
}

PulsePair::PulsePair(PulseParams params, std::vector<double> t, std::vector<double> pump,
                     std::vector<double> stokes)
    : params_(std::move(params)), t_(std::move(t)), pump_(std::move(pump)), stokes_(std::move(stokes)) {
  if (t_.size() < 2) throw DomainError("PulsePair: need at least 2 samples");
  if (pump_.size() != t_.size() || stokes_.size() != t_.size()) {
    throw DomainError("PulsePair: sample arrays differ in length");
  }
  const double h = step();
  if (!(h > 0.0)) throw DomainError("PulsePair: time grid must increase");
  for (std::size_t k = 1; k < t_.size(); ++k) {
    if (std::abs((t_[k] - t_[k - 1]) - h) > 1e-9 * h) {
      throw DomainError("PulsePair: time grid is not uniform");
    }
  }
}

PulseFamily PulsePair::family() const {
  return std::visit(Overloaded{
                        [](const TrackingParams&) { return PulseFamily::Shaped; },
                        [](const GaussianParams&) { return PulseFamily::Gaussian; },
                        [](const AdiabOptParams&) { return PulseFamily::AdiabOpt; },
                    },
                    params_);
}

FieldPair PulsePair::at(double t) const {
  return std::visit(Overloaded{
                        [t](const TrackingParams& p) { return eval_shaped_at(p, t); },
                        [t](const GaussianParams& p) { return eval_gaussian(p, t); },
                        [t](const AdiabOptParams& p) { return eval_adiabopt(p, t); },
                    },
                    params_);
}

FieldPair eval_gaussian(const GaussianParams& p, double t) {
  const double th = t - p.T / 2;
  const double a = (th - p.delay / 2) / p.sigma;
  const double b = (th + p.delay / 2) / p.sigma;
  return {-p.peak * std::exp(-a * a), p.peak * std::exp(-b * b)};
}

FieldPair eval_adiabopt(const AdiabOptParams& p, double t) {
  const double th = t - p.T / 2;
  const double envelope = p.peak * std::exp(-std::pow(th / (p.waist_factor * p.sigma), 2 * p.power));
  const double f = 1.0 + std::exp(-p.switch_rate * th / p.sigma);
  const double angle = (kPi / 2) / f;
  return {-envelope * std::sin(angle), envelope * std::cos(angle)};
}

FieldPair eval_shaped_at(const TrackingParams& p, double t) {
  const double theta = theta_of_t(t, p);
  return detail::shaped_fields(theta, kPi / 2 - theta, p);
}

PulsePair eval_shaped(const TrackingParams& p) { return synthesize_fields(build_trajectory(p)); }

PulsePair sample_gaussian(const GaussianParams& p, std::size_t n_grid) {
  return sample(p, n_grid, eval_gaussian);
}

PulsePair sample_adiabopt(const AdiabOptParams& p, std::size_t n_grid) {
  return sample(p, n_grid, eval_adiabopt);
}

double generalized_area(const PulsePair& pp) {
  std::vector<double> rabi(pp.size());
  for (std::size_t k = 0; k < pp.size(); ++k) rabi[k] = std::hypot(pp.pump()[k], pp.stokes()[k]);
  return trapezoid<double>(rabi, pp.step());
}

PulseAreas pulse_areas(const PulsePair& pp) {
  return {trapezoid(pp.pump(), pp.step()), trapezoid(pp.stokes(), pp.step())};
}

BoundaryReport boundary_check(const PulsePair& pp) {
  double peak = 0.0;
  for (std::size_t k = 0; k < pp.size(); ++k) {
    peak = std::max(peak, std::hypot(pp.pump()[k], pp.stokes()[k]));
  }
  const double edge = std::max({std::abs(pp.pump().front()), std::abs(pp.pump().back()),
                                std::abs(pp.stokes().front()), std::abs(pp.stokes().back())});
  BoundaryReport report;
  report.max_ratio = peak > 0.0 ? edge / peak : 0.0;
  report.pass = report.max_ratio <= kBoundaryTolerance;
  return report;
}

}  // namespace stirep
