#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "cutreg/kernel.hpp"
#include "cutreg/numerics.hpp"

namespace cutreg {

/// Convex combination of multi-index homogenisations.
struct MultiIndexEntry {
  double weight;
  std::vector<double> alpha;
};

class MultiIndexScheme {
 public:
  const std::vector<MultiIndexEntry>& entries() const noexcept { return entries_; }

  /// alpha = (1/2) with weight 1.
  static MultiIndexScheme single_half();

 private:
  friend MultiIndexScheme validate_scheme(std::vector<MultiIndexEntry> raw);
  explicit MultiIndexScheme(std::vector<MultiIndexEntry> entries)
      : entries_(std::move(entries)) {}
  std::vector<MultiIndexEntry> entries_;
};

/// Checks that weights are positive and sum to 1 (1e-14), every component
/// lies in (0, 1/2] and 2 * sum_j alpha_j <= 1 for every entry.
MultiIndexScheme validate_scheme(std::vector<MultiIndexEntry> raw);

/// Parses "a,b;c;..." where entries are separated by ';' and components
/// by ','. Entries get equal weights.
MultiIndexScheme parse_alpha_list(std::string_view text);

enum class McEstimator {
  /// Draws all 2 dim(alpha) sphere points and evaluates G_n.
  plain,
  /// Draws all but the last sphere point and applies the last sphere
  /// average exactly: the average of G_n over a sphere of radius a is
  /// G_n^{1/a,0}. Unbiased, bounded integrand.
  conditioned,
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::size_t rejected = 0;
};

/// Pools two independent estimates as if drawn in one run.
McEstimate merge(const McEstimate& a, const McEstimate& b);

/// Monte Carlo estimate of sum_i kappa_i H_{alpha_i}^L(G_n)(x).
McEstimate homogenize_mc(const MultiIndexScheme& scheme, const Dimension& dim,
                         double cutoff, std::span<const double> x,
                         std::size_t samples, RngStream& stream,
                         McEstimator estimator = McEstimator::conditioned);

/// Runs `batches` independent batches on stream ids 0..batches-1 of `seed`
/// (concurrently when threads > 1) and merges them in batch order. The
/// result does not depend on the thread count.
McEstimate homogenize_mc_batched(const MultiIndexScheme& scheme,
                                 const Dimension& dim, double cutoff,
                                 std::span<const double> x,
                                 std::size_t samples_per_batch,
                                 std::size_t batches, std::uint64_t seed,
                                 unsigned threads = 1,
                                 McEstimator estimator = McEstimator::conditioned);

/// f(s) = (n-2) S_{n-1} sum_i kappa_i H^1_{alpha_i}(G_n)(sqrt(s) e) - baseline(s)
/// with the unit vector e (default e_1).
McEstimate extract_deforming(const MultiIndexScheme& scheme, const Dimension& dim,
                             double s, std::size_t samples, RngStream& stream,
                             std::span<const double> direction = {},
                             McEstimator estimator = McEstimator::conditioned);

/// Tabulates extract_deforming on `nodes` + 1 radial nodes t_k = k / nodes
/// and wraps the table as an extracted deforming function.
DeformingFunction make_extracted_deforming(const MultiIndexScheme& scheme,
                                           const Dimension& dim,
                                           std::size_t samples,
                                           std::uint64_t seed, int nodes = 32);

/// Negative Laplacian of H^1_{(1/2)}(G_n):
///   (2^{n-1} S_{n-2}/S_{n-1}^2) r^{-1} (1 - r^2)^{(n-3)/2}  for r <= 1, else 0.
double smeared_laplacian_density(const Dimension& dim, double radius);

/// S_{n-1} int_0^inf L^n d(L r) phi(r) r^{n-1} dr, d the density above
/// rescaled to cutoff L; equals 1 for phi = 1.
Integral pair_smeared_density(const Dimension& dim, double cutoff,
                              const std::function<double(double)>& phi,
                              const QuadratureSpec& spec = {});

/// sum_i kappa_i s^{-2} prod_j rho_n(s alpha_ij / L)^2, the Fourier
/// transform of the homogenised kernel at |y| = s.
double fourier_density_product(const MultiIndexScheme& scheme, const Dimension& dim,
                               double cutoff, double s);

/// Solves -r^{1-n} (r^{n-1} u')' = density on (0, 1] with u and u' matched to
/// G_n at r = 1; returns u on the grid (increasing, in (0, 1]).
std::vector<double> radial_poisson_reconstruct(const Dimension& dim,
                                               const std::function<double(double)>& density,
                                               std::span<const double> grid,
                                               const QuadratureSpec& spec = {});

/// Inverts the deformation ansatz at L = 1: f(r^2) = (n-2) S_{n-1} u(r) - 1.
double deforming_from_profile(const Dimension& dim, double profile_value);

}  // namespace cutreg
