#include <cmath>
#include <limits>

#include "cutreg/criterion.hpp"

namespace cutreg {

SeriesDensity series_fourier_density(const SeriesScheme& scheme, const Dimension& dim,
                                     double cutoff, double s) {
  if (!(s > 0.0)) throw DomainError("series_fourier_density: requires s > 0");
  if (!(cutoff > 0.0)) throw DomainError("series_fourier_density: cutoff must be positive");
  double sum = 0.0;
  for (std::size_t i = 0; i < scheme.weights().size(); ++i) {
    const double r = rho(dim, s * scheme.radii()[i] / (2.0 * cutoff));
    sum += scheme.weights()[i] * r * r;
  }
  return {sum / (s * s), scheme.tail_mass() / (s * s)};
}

StrictnessFloor strictness_floor(const SeriesScheme& scheme, const Dimension& dim,
                                 double cutoff_min, double s) {
  if (!(s > 0.0)) throw DomainError("strictness_floor: requires s > 0");
  if (!(cutoff_min > 0.0)) throw DomainError("strictness_floor: cutoff must be positive");
  const double theta = rho_first_zero(dim);
  int best = -1;
  for (std::size_t i = 0; i < scheme.weights().size(); ++i) {
    if (s * scheme.radii()[i] / cutoff_min > theta) continue;
    if (best < 0 || scheme.weights()[i] > scheme.weights()[best]) best = static_cast<int>(i);
  }
  if (best < 0) {
    throw CertificateUnavailable("strictness_floor: no retained radius satisfies s r_j / N <= theta");
  }
  constexpr int kGrid = 1000;
  const double r = scheme.radii()[best];
  double m = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kGrid; ++k) {
    const double u = s * k / kGrid;
    m = std::min(m, rho(dim, u * r / (2.0 * cutoff_min)));
  }
  m *= 0.999;
  StrictnessFloor out;
  out.index = best + 1;
  out.m = m;
  out.floor = scheme.weights()[best] * m * m / (s * s);
  return out;
}

}  // namespace cutreg
