#include <cmath>
#include <numbers>

#include "cutreg/kernel.hpp"

namespace cutreg {
namespace {

// Within this distance of 0 or 1 the explicit f_4 and f_6 lose digits to
// cancellation; the hypergeometric form has none there.
constexpr double kEndpointBand = 1e-3;

double f4_explicit(double s) {
  const double root = std::sqrt(s);
  return 3.0 - (4.0 * s + 2.0) / std::numbers::pi * std::sqrt((1.0 - s) / s) +
         2.0 / std::numbers::pi * (1.0 / s - 4.0) * std::asin(root);
}

double f6_explicit(double s) {
  const double root = std::sqrt(s);
  const double poly = ((16.0 * s - 56.0) * s - 2.0) * s - 3.0;
  return 15.0 + 2.0 / (3.0 * std::numbers::pi) * poly * std::sqrt((1.0 - s) / (s * s * s)) +
         2.0 / std::numbers::pi * (1.0 / (s * s) - 16.0) * std::asin(root);
}

void check_argument(double s) {
  if (!(s >= 0.0)) throw DomainError("deforming function: argument must be non-negative");
}

}  // namespace

double green(const Dimension& dim, double radius) {
  if (!(radius >= 0.0)) throw DomainError("green: radius must be non-negative");
  if (radius == 0.0) throw SingularityError("green: singular at the origin");
  return std::pow(radius, 2 - dim.n()) / dim.green_normalisation();
}

double green_cut(const Dimension& dim, double cutoff, double radius) {
  if (!(cutoff > 0.0)) throw DomainError("green_cut: cutoff must be positive");
  if (!(radius >= 0.0)) throw DomainError("green_cut: radius must be non-negative");
  if (radius * cutoff <= 1.0) {
    return std::pow(cutoff, dim.n() - 2) / dim.green_normalisation();
  }
  return green(dim, radius);
}

double deforming_f_general(const Dimension& dim, double s) {
  check_argument(s);
  if (s >= 1.0) return 0.0;  // f_n(1) = 0 exactly
  const int n = dim.n();
  const double amplitude = std::ldexp(1.0, n - 1) * std::sqrt(s) * sphere_area(n - 2) /
                           dim.surface_area();
  const double first = hyp2f1(0.5, 0.5 * (3 - n), 1.5, s);
  const double second = hyp2f1(0.5 * (3 - n), 0.5 * (n - 1), 0.5 * (n + 1), s);
  return std::ldexp(1.0, n - 2) - 1.0 - amplitude * first + amplitude / (n - 1) * second;
}

double deforming_f_closed(const Dimension& dim, double s) {
  check_argument(s);
  if (s >= 1.0) return 0.0;
  const bool interior = s >= kEndpointBand && s <= 1.0 - kEndpointBand;
  switch (dim.n()) {
    case 3: return 1.0 - std::sqrt(s);
    case 5: {
      const double root = std::sqrt(s);
      return 7.0 - 9.0 * root + 2.0 * s * root;
    }
    case 4:
      if (interior) return f4_explicit(s);
      break;
    case 6:
      if (interior) return f6_explicit(s);
      break;
    default:
      break;
  }
  return deforming_f_general(dim, s);
}

double DeformedGreen::operator()(double radius) const {
  if (!(radius >= 0.0)) throw DomainError("deformed_green: radius must be non-negative");
  const double x = radius * cutoff;
  const double deformation =
      std::pow(cutoff, dim.n() - 2) / dim.green_normalisation() * f(x * x);
  return deformation + green_cut(dim, cutoff, radius);
}

double deformed_green(const DeformedGreen& g, double radius) { return g(radius); }

}  // namespace cutreg
