#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace stirep {

/// Uniform grid of `n` samples covering [t0, t1], endpoints included.
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

/// Composite trapezoid rule on a uniform grid with spacing `h`.
template <typename T>
T trapezoid(std::span<const T> f, double h) {
  if (f.size() < 2) return T{};
  T acc{};
  for (std::size_t k = 1; k + 1 < f.size(); ++k) acc += f[k];
  acc += 0.5 * (f.front() + f.back());
  return acc * h;
}

/// Running trapezoid integral: out[k] = integral of f from t_0 to t_k.
template <typename T>
std::vector<T> cumulative_trapezoid(std::span<const T> f, double h) {
  std::vector<T> out(f.size(), T{});
  for (std::size_t k = 1; k < f.size(); ++k) {
    out[k] = out[k - 1] + 0.5 * h * (f[k - 1] + f[k]);
  }
  return out;
}

}  // namespace stirep
