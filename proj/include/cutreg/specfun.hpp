#pragma once

#include <span>

#include "cutreg/errors.hpp"

namespace cutreg {

/// Ambient dimension n of R^n, restricted to 3 <= n <= 12.
class Dimension {
 public:
  static constexpr int kMin = 3;
  static constexpr int kMax = 12;

  explicit Dimension(int n);

  int n() const noexcept { return n_; }
  /// Area S_{n-1} of the unit sphere in R^n.
  double surface_area() const noexcept { return surface_area_; }
  /// Bessel order n/2 - 1 appearing in rho_n.
  double bessel_order() const noexcept { return 0.5 * n_ - 1.0; }
  /// Normalisation (n - 2) S_{n-1} of the fundamental solution.
  double green_normalisation() const noexcept {
    return (n_ - 2) * surface_area_;
  }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  int n_;
  double surface_area_;
};

/// Area of the unit sphere S^k embedded in R^{k+1}, for k >= 0.
double sphere_area(int k);

/// Stopping rules shared by the series-based special functions.
struct AccuracyBudget {
  double rel_tol = 1e-15;
  double abs_tol = 1e-17;
  int max_terms = 500;

  /// Throws ConfigurationError unless rel_tol, abs_tol in (0,1) and
  /// max_terms >= 16.
  void validate() const;
};

/// A special-function value with its truncation estimate.
struct SpecialValue {
  double value = 0.0;
  double error_estimate = 0.0;
  int terms = 0;
  bool met_budget = true;
};

/// Gamma function for z > 0.
double gamma(double z);

/// Bessel J_nu(s) for nu in {0, 1/2, 1, ..., 5} and 0 <= s <= 1e4.
SpecialValue bessel_j_eval(double nu, double s, const AccuracyBudget& budget = {});
double bessel_j(double nu, double s);

/// Normalised spherical characteristic function
///   rho_n(s) = Gamma(n/2) (s/2)^{1-n/2} J_{n/2-1}(s),
/// continued analytically to rho_n(0) = 1.
double rho(const Dimension& dim, double s);

/// rho_n on a batch of arguments. Uses the vector kernel selected at
/// start-up for the small-argument branch; results equal rho() bitwise.
void rho_batch(const Dimension& dim, std::span<const double> s,
               std::span<double> out);

/// Largest absolute error assumed for a single rho() evaluation.
inline constexpr double kRhoErrorBound = 2e-15;

/// rho_n by quadrature of the sphere average
///   (S_{n-2}/S_{n-1}) int_0^pi sin^{n-2}(phi) cos(s cos phi) dphi,
/// using composite Gauss-Legendre with quad_nodes nodes per panel.
/// Independent of the Bessel route; used to cross-check rho().
double rho_sphere_oracle(const Dimension& dim, double s, int quad_nodes);

/// Smallest theta > 0 with rho_n(theta) = 0, to 1e-12.
double rho_first_zero(const Dimension& dim);

/// Gauss hypergeometric 2F1(a, b; c; s) for s in [0, 1], restricted to
///   (1/2, (3-n)/2; 3/2) and ((3-n)/2, (n-1)/2; (n+1)/2),  3 <= n <= 12
/// (a and b may be swapped). Every triple returns 1 at s = 0.
SpecialValue hyp2f1_eval(double a, double b, double c, double s,
                         const AccuracyBudget& budget = {});
double hyp2f1(double a, double b, double c, double s);

}  // namespace cutreg
