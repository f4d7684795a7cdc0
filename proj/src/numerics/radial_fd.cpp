#include "cutreg/numerics.hpp"

namespace cutreg {

double radial_laplacian_fd(const RadialFunction& g, double r, double h, const Dimension& dim) {
  if (!(h > 0.0) || !(r > h)) throw DomainError("radial_laplacian_fd: requires r > h > 0");
  const double plus = g(r + h);
  const double centre = g(r);
  const double minus = g(r - h);
  const double second = (plus - 2.0 * centre + minus) / (h * h);
  const double first = (plus - minus) / (2.0 * h);
  return -second - (dim.n() - 1) / r * first;
}

}  // namespace cutreg
