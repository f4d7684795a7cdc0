#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutreg/kernel.hpp"
#include "cutreg/numerics.hpp"

namespace cutreg {

struct PhiValue {
  double value = 0.0;
  double err = 0.0;
};

/// Phi_n(s) = s^2/(n-2) int_0^1 t^{n-1} rho_n(t s) f(t^2) dt + rho_n(s).
/// The kernel is admissible iff Phi_n(s) >= 0 for all s >= 0.
PhiValue phi(const Dimension& dim, const DeformingFunction& f, double s,
             const QuadratureSpec& spec = {});

enum class Verdict { fails, holds_weak, holds_strict };
const char* verdict_name(Verdict v);

struct CriterionReport {
  Dimension dim;
  std::string f_descriptor;
  std::vector<double> s_grid;
  std::vector<double> phi_values;
  std::vector<double> phi_errors;
  double min_phi = 0.0;
  double argmin_s = 0.0;
  double quad_err_max = 0.0;
  /// Smallest positive lower bound on Phi over the grid, when every grid
  /// point carries one.
  std::optional<double> analytic_floor;
  Verdict verdict = Verdict::holds_weak;
};

struct ScanOptions {
  double s_max = 200.0;
  int grid_points = 4000;
  int random_probes = 200;
  std::uint64_t seed = 0;
  QuadratureSpec spec{};
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Scheme behind a series deforming function; enables the strictness
  /// floor (evaluated with cutoff_min = r_max, the normalisation of Phi).
  std::optional<SeriesScheme> floor_scheme;
};

/// Evaluates Phi on a uniform grid over [0, s_max] plus random probes and
/// classifies the result. A value counts as negative only below
/// -quad_err_max. For series deforming functions the strictness floor is
/// consulted to award holds_strict.
CriterionReport criterion_scan(const Dimension& dim, const DeformingFunction& f,
                               const ScanOptions& options);

// ---------------------------------------------------------------------------
// Series spectral density and strictness certificate
// ---------------------------------------------------------------------------

struct SeriesDensity {
  double value = 0.0;
  /// Upper bound on the contribution of dropped terms: tail_mass / s^2.
  double tail_bound = 0.0;
};

/// s^{-2} sum_i kappa_i rho_n(s r_i / (2L))^2.
SeriesDensity series_fourier_density(const SeriesScheme& scheme, const Dimension& dim,
                                     double cutoff, double s);

struct StrictnessFloor {
  double floor = 0.0;
  int index = 0;  // 1-based term index j
  double m = 0.0;
};

/// kappa_j m^2 / s^2 where j is the heaviest retained term with
/// s r_j / cutoff_min <= theta (theta the first zero of rho_n) and
/// m = 0.999 * min_{u in [0,s]} rho_n(u r_j / (2 cutoff_min)), the minimum
/// taken on a 1001-point grid. Never exceeds series_fourier_density.
/// Throws CertificateUnavailable when no retained term qualifies.
StrictnessFloor strictness_floor(const SeriesScheme& scheme, const Dimension& dim,
                                 double cutoff_min, double s);

}  // namespace cutreg
