#include <cmath>
#include <numbers>
#include <string>

#include "cutreg/specfun.hpp"

namespace cutreg {

double sphere_area(int k) {
  if (k < 0) throw DomainError("sphere_area: negative sphere dimension");
  const double half = 0.5 * (k + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

Dimension::Dimension(int n) : n_(n), surface_area_(0.0) {
  if (n < kMin || n > kMax) {
    throw DomainError("dimension n = " + std::to_string(n) +
                      " outside the supported range [3, 12]");
  }
  surface_area_ = sphere_area(n - 1);
}

void AccuracyBudget::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0)) {
    throw ConfigurationError("accuracy budget tolerances must lie in (0, 1)");
  }
  if (max_terms < 16) {
    throw ConfigurationError("accuracy budget needs max_terms >= 16");
  }
}

double gamma(double z) {
  if (!(z > 0.0)) throw DomainError("gamma: argument must be positive");
  return std::tgamma(z);
}

}  // namespace cutreg
