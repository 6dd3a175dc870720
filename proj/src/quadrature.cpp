#include "stirep/quadrature.hpp"

#include "stirep/common.hpp"

namespace stirep {

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
  if (n < 2) throw DomainError("uniform_grid: need at least 2 samples");
  if (!(t1 > t0)) throw DomainError("uniform_grid: empty interval");
  std::vector<double> t(n);
  const double h = (t1 - t0) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) t[k] = t0 + h * static_cast<double>(k);
  t.back() = t1;
  return t;
}

}  // namespace stirep
