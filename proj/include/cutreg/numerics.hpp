#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "cutreg/specfun.hpp"

namespace cutreg {

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

enum class QuadratureMethod { gauss_legendre_fixed, adaptive_bisection };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::adaptive_bisection;
  int nodes = 32;
  double abs_tol = 1e-12;
  int max_depth = 30;

  /// Throws ConfigurationError unless nodes in [4, 512], abs_tol > 0 and
  /// max_depth in [0, 40].
  void validate() const;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule with k nodes. Tables are computed once per k and shared.
const GaussLegendreRule& gauss_legendre(int k);

struct Integral {
  double value = 0.0;
  /// Bound on |value - exact|: panel refinement differences plus a
  /// rounding allowance proportional to the integral of |f|.
  double err_est = 0.0;
  /// Integral of |f| over the same panels.
  double abs_value = 0.0;
};

/// Integrand evaluated on a batch of abscissae: out[i] = f(t[i]).
using BatchIntegrand =
    std::function<void(std::span<const double> t, std::span<double> out)>;

/// Integrates f over [a, b]. Interior breakpoints (outside (a, b) ignored)
/// start the partition; adaptive mode bisects each panel until the
/// difference between one panel and its two halves is within the panel's
/// share of abs_tol. Throws ConvergenceError carrying the partial value
/// when max_depth is exhausted.
Integral integrate_batch(const BatchIntegrand& f, double a, double b,
                         const QuadratureSpec& spec = {},
                         std::span<const double> breakpoints = {});

template <class F>
Integral integrate(F&& f, double a, double b, const QuadratureSpec& spec = {},
                   std::span<const double> breakpoints = {}) {
  BatchIntegrand batch = [&f](std::span<const double> t, std::span<double> out) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]);
  };
  return integrate_batch(batch, a, b, spec, breakpoints);
}

// ---------------------------------------------------------------------------
// Random streams
// ---------------------------------------------------------------------------

/// Reproducible random stream keyed by (seed, stream_id). Distinct
/// stream ids give statistically independent sequences.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  double normal();
  /// Uniform on [0, 1).
  double uniform();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Uniform point on S^{n-1}, written into out (size n).
void sample_unit_sphere(const Dimension& dim, RngStream& stream,
                        std::span<double> out);
std::vector<double> sample_unit_sphere(const Dimension& dim, RngStream& stream);

// ---------------------------------------------------------------------------
// Radial finite differences
// ---------------------------------------------------------------------------

using RadialFunction = std::function<double(double)>;

/// Central-difference approximation of
///   (A_n g)(r) = -g''(r) - (n-1)/r g'(r),
/// the negative Laplacian of a radial function. Second order in h.
double radial_laplacian_fd(const RadialFunction& g, double r, double h,
                           const Dimension& dim);

}  // namespace cutreg
