#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cutreg/homogenize.hpp"

namespace cutreg {
namespace {

double density_constant(const Dimension& dim) {
  const double area = dim.surface_area();
  return std::ldexp(1.0, dim.n() - 1) * sphere_area(dim.n() - 2) / (area * area);
}

// int_a^b tau^{n-1} density(tau) dtau with tau = sin(theta); removes the
// (1 - tau^2)^{1/2} endpoint behaviour that appears for even n.
Integral enclosed_mass(const Dimension& dim, const std::function<double(double)>& density,
                       double a, double b, const QuadratureSpec& spec) {
  const int n = dim.n();
  return integrate(
      [&](double theta) {
        const double tau = std::sin(theta);
        return std::pow(tau, n - 1) * density(tau) * std::cos(theta);
      },
      std::asin(a), std::asin(b), spec);
}

}  // namespace

double smeared_laplacian_density(const Dimension& dim, double radius) {
  if (!(radius >= 0.0)) throw DomainError("smeared_laplacian_density: radius must be non-negative");
  if (radius == 0.0) throw SingularityError("smeared_laplacian_density: singular at the origin");
  if (radius > 1.0) return 0.0;
  return density_constant(dim) / radius * std::pow(1.0 - radius * radius, 0.5 * (dim.n() - 3));
}

Integral pair_smeared_density(const Dimension& dim, double cutoff,
                              const std::function<double(double)>& phi,
                              const QuadratureSpec& spec) {
  if (!(cutoff > 0.0)) throw DomainError("pair_smeared_density: cutoff must be positive");
  const int n = dim.n();
  const double c = density_constant(dim) * dim.surface_area();
  // u = L r = sin(theta): density(u) u^{n-1} du = c' sin^{n-2} cos^{n-2} dtheta
  Integral out = integrate(
      [&](double theta) {
        const double s = std::sin(theta);
        const double co = std::cos(theta);
        return c * std::pow(s * co, n - 2) * phi(s / cutoff);
      },
      0.0, 0.5 * std::numbers::pi, spec);
  return out;
}

double fourier_density_product(const MultiIndexScheme& scheme, const Dimension& dim,
                               double cutoff, double s) {
  if (!(s > 0.0)) throw DomainError("fourier_density_product: requires s > 0");
  if (!(cutoff > 0.0)) throw DomainError("fourier_density_product: cutoff must be positive");
  double sum = 0.0;
  for (const MultiIndexEntry& e : scheme.entries()) {
    double product = 1.0;
    for (double a : e.alpha) {
      const double r = rho(dim, s * a / cutoff);
      product *= r * r;
    }
    sum += e.weight * product;
  }
  return sum / (s * s);
}

std::vector<double> radial_poisson_reconstruct(const Dimension& dim,
                                               const std::function<double(double)>& density,
                                               std::span<const double> grid,
                                               const QuadratureSpec& spec) {
  if (grid.empty()) return {};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0 && grid[k] <= 1.0) || (k > 0 && !(grid[k] > grid[k - 1]))) {
      throw DomainError("radial_poisson_reconstruct: grid must increase within (0, 1]");
    }
  }
  const int n = dim.n();
  const double area = dim.surface_area();

  // Matching at r = 1: u(1) = G_n(1), u'(1) = G_n'(1) = -1/S_{n-1}. Flux balance
  //   r^{n-1} u'(r) = u'(1) + int_r^1 tau^{n-1} density
  //                 = (u'(1) + total) - int_0^r tau^{n-1} density,
  // evaluated in the second form to avoid cancellation at small r.
  // A residual point charge at the origin below the quadrature uncertainty of
  // the total mass is rounding noise; kept, it would grow like r^{2-n}.
  const Integral total = enclosed_mass(dim, density, 0.0, 1.0, spec);
  double flux_at_zero = -1.0 / area + total.value;
  const double charge_noise =
      total.err_est + 8.0 * std::numeric_limits<double>::epsilon() * (1.0 / area + total.abs_value);
  if (std::fabs(flux_at_zero) <= charge_noise) flux_at_zero = 0.0;

  std::vector<double> points(grid.begin(), grid.end());
  if (points.back() < 1.0) points.push_back(1.0);

  std::vector<double> enclosed(points.size());
  double running = 0.0;
  double previous = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    running += enclosed_mass(dim, density, previous, points[k], spec).value;
    enclosed[k] = running;
    previous = points[k];
  }

  std::vector<double> u(points.size());
  u.back() = green(dim, 1.0);
  for (std::size_t k = points.size() - 1; k-- > 0;) {
    const double lo = points[k];
    const double hi = points[k + 1];
    const double base = enclosed[k];
    const Integral slope = integrate(
        [&](double theta) {
          const double t = std::sin(theta);
          const double inner = base + enclosed_mass(dim, density, lo, t, spec).value;
          return std::pow(t, 1 - n) * (flux_at_zero - inner) * std::cos(theta);
        },
        std::asin(lo), std::asin(hi), spec);
    u[k] = u[k + 1] - slope.value;
  }
  u.resize(grid.size());
  return u;
}

double deforming_from_profile(const Dimension& dim, double profile_value) {
  return dim.green_normalisation() * profile_value - 1.0;
}

}  // namespace cutreg
