#include <algorithm>
#include <cmath>
#include <numeric>

#include "cutreg/kernel.hpp"

namespace cutreg {

SeriesScheme::SeriesScheme(const Dimension& dim, std::vector<double> weights,
                           std::vector<double> radii, double tail_mass)
    : dim_(dim), weights_(std::move(weights)), radii_(std::move(radii)), tail_mass_(tail_mass) {
  if (weights_.empty() || weights_.size() != radii_.size()) {
    throw ConfigurationError("series scheme: weights and radii must be non-empty and equally long");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw ConfigurationError("series scheme: weight " + std::to_string(i + 1) + " is not positive");
    }
    if (!(radii_[i] > 0.0) || !std::isfinite(radii_[i])) {
      throw ConfigurationError("series scheme: radius " + std::to_string(i + 1) + " is not positive");
    }
  }
  if (!(tail_mass_ >= 0.0 && tail_mass_ < 1.0)) {
    throw ConfigurationError("series scheme: tail mass must lie in [0, 1)");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  for (double& w : weights_) w /= total;
  r_max_ = *std::max_element(radii_.begin(), radii_.end());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    kappa_bound_ += weights_[i] * std::pow(radii_[i], -dim_.n());
  }
}

SeriesScheme SeriesScheme::geometric_truncated(const Dimension& dim, int terms) {
  if (terms < 1 || terms > 1000) throw ConfigurationError("series scheme: truncation must lie in [1, 1000]");
  std::vector<double> weights(terms);
  std::vector<double> radii(terms);
  for (int i = 1; i <= terms; ++i) {
    weights[i - 1] = std::ldexp(1.0, -i);
    radii[i - 1] = std::exp2(-static_cast<double>(i) / (2.0 * dim.n()));
  }
  return SeriesScheme(dim, std::move(weights), std::move(radii), std::ldexp(1.0, -terms));
}

SeriesScheme SeriesScheme::geometric(const Dimension& dim, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw ConfigurationError("series scheme: tail tolerance must lie in (0, 1)");
  }
  int terms = 1;
  while (std::ldexp(1.0, -terms) >= tail_tol) ++terms;
  return geometric_truncated(dim, terms);
}

SeriesScheme SeriesScheme::from_terms(const Dimension& dim, std::vector<double> weights,
                                      std::vector<double> radii, double tail_mass) {
  return SeriesScheme(dim, std::move(weights), std::move(radii), tail_mass);
}

double series_deforming_f(const SeriesScheme& scheme, const Dimension& dim, double s) {
  if (!(scheme.dim() == dim)) throw ConfigurationError("series scheme built for another dimension");
  if (!(s >= 0.0)) throw DomainError("series deforming function: argument must be non-negative");
  if (s > 1.0) return 0.0;
  const int n = dim.n();
  const double outside = std::pow(s, 1.0 - 0.5 * n);
  double sum = 0.0;
  for (std::size_t i = 0; i < scheme.weights().size(); ++i) {
    const double scale = scheme.r_max() / scheme.radii()[i];  // L_i >= 1
    const double u = s * scale * scale;
    const double term = u <= 1.0
                            ? std::pow(scale, n - 2) * (deforming_f_closed(dim, u) + 1.0)
                            : outside;
    sum += scheme.weights()[i] * term;
  }
  return sum - 1.0;
}

double series_bound_m(const Dimension& dim) {
  double best = 0.0;
  constexpr int kGrid = 2000;
  for (int k = 0; k <= kGrid; ++k) {
    const double s = static_cast<double>(k) / kGrid;
    best = std::max(best, std::fabs(deforming_f_closed(dim, s)) + 1.0);
  }
  return best / dim.green_normalisation();
}

}  // namespace cutreg
