#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cutreg/specfun.hpp"

namespace cutreg {

/// Fundamental solution G_n(x) = |x|^{2-n} / ((n-2) S_{n-1}) at |x| = radius.
double green(const Dimension& dim, double radius);

/// Bare cutoff kernel G_n^{L,0}: constant L^{n-2}/((n-2)S_{n-1}) on the
/// closed ball |x| <= 1/L, equal to G_n outside.
double green_cut(const Dimension& dim, double cutoff, double radius);

/// Deforming function f_n built from a single homogenisation with
/// alpha = (1/2). Uses the explicit forms for n in {3,4,5,6} (switching to
/// the hypergeometric form within 1e-3 of the endpoints for n = 4, 6) and
/// the hypergeometric form otherwise. Zero for s > 1.
double deforming_f_closed(const Dimension& dim, double s);

/// The same f_n evaluated only through the 2F1 representation.
double deforming_f_general(const Dimension& dim, double s);

class SeriesScheme;

/// A continuous deforming function supported in [0, 1].
///
/// Equality is extensional; compare evaluations on a grid.
class DeformingFunction {
 public:
  enum class Kind { zero, closed_form, extracted, series, custom };

  static DeformingFunction zero();
  static DeformingFunction closed_form(const Dimension& dim);
  static DeformingFunction series(const SeriesScheme& scheme, const Dimension& dim);
  /// Tabulated on radial nodes t_k (s = t_k^2) with per-node standard
  /// errors; linear interpolation in t. Nodes must increase from 0 to 1.
  static DeformingFunction tabulated(Kind kind, std::string descriptor,
                                     std::vector<double> t_nodes,
                                     std::vector<double> values,
                                     std::vector<double> std_errors);
  /// Arbitrary evaluator; breakpoints are points in s where the function
  /// is not smooth. The evaluator is not forced to vanish beyond s = 1.
  static DeformingFunction custom(std::string descriptor,
                                  std::function<double(double)> fn,
                                  std::vector<double> breakpoints = {});

  double operator()(double s) const;
  /// One standard error of the value at s (nonzero only for tabulated kinds).
  double uncertainty(double s) const;
  /// Points in s in (0, 1] where f has kinks or switches branches.
  const std::vector<double>& breakpoints() const;

  Kind kind() const;
  const std::string& descriptor() const;

 private:
  struct Impl;
  explicit DeformingFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Regularised kernel G_n^{L,f}.
struct DeformedGreen {
  Dimension dim;
  double cutoff;
  DeformingFunction f;

  /// (L^{n-2}/((n-2)S_{n-1})) f(radius^2 L^2) + G_n^{L,0}(radius).
  double operator()(double radius) const;
};

double deformed_green(const DeformedGreen& g, double radius);

/// Convex series of rescaled deformations sum_i kappa_i G_n^{L/r_i, f_n},
/// truncated to finitely many terms with weights renormalised to sum to 1.
class SeriesScheme {
 public:
  /// kappa_i = 2^{-i}, r_i = 2^{-i/(2n)}, i >= 1, keeping the smallest N with
  /// sum_{i>N} kappa_i = 2^{-N} < tail_tol.
  static SeriesScheme geometric(const Dimension& dim, double tail_tol = 1e-12);
  /// The same sequences truncated at exactly N terms.
  static SeriesScheme geometric_truncated(const Dimension& dim, int terms);
  /// Explicit finite scheme; weights and radii must be positive and finite.
  /// tail_mass is the weight dropped by truncation (0 for a finite scheme).
  static SeriesScheme from_terms(const Dimension& dim, std::vector<double> weights,
                                 std::vector<double> radii, double tail_mass = 0.0);

  const Dimension& dim() const noexcept { return dim_; }
  /// Renormalised weights, summing to 1.
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& radii() const noexcept { return radii_; }
  int truncation() const noexcept { return static_cast<int>(weights_.size()); }
  double r_max() const noexcept { return r_max_; }
  /// sum_i kappa_i r_i^{-n} over retained terms.
  double kappa_bound() const noexcept { return kappa_bound_; }
  /// Weight dropped before renormalisation.
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  SeriesScheme(const Dimension& dim, std::vector<double> weights,
               std::vector<double> radii, double tail_mass);

  Dimension dim_;
  std::vector<double> weights_;
  std::vector<double> radii_;
  double r_max_ = 0.0;
  double kappa_bound_ = 0.0;
  double tail_mass_ = 0.0;
};

/// Deforming function of the series, defined by
///   sum_i kappa_i G_n^{L/r_i, f_n} = G_n^{L/r_max, f~}.
double series_deforming_f(const SeriesScheme& scheme, const Dimension& dim, double s);

/// max over the unit ball of (|f_n(|x|^2)| + 1)/((n-2)S_{n-1}), on a grid.
double series_bound_m(const Dimension& dim);

}  // namespace cutreg
