#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "cutreg/numerics.hpp"
#include "cutreg/simd.hpp"
#include "cutreg/specfun.hpp"

namespace cutreg {
namespace {

// Branches of rho_n:
//   s <= kPolyLimit    fixed-degree even polynomial (vectorised kernel)
//   s <= kSeriesLimit  ascending series in long double
//   otherwise          Gamma(n/2) (2/s)^nu J_nu(s), Hankel expansion
constexpr double kPolyLimit = 6.0;
constexpr double kSeriesLimit = 15.0;
constexpr int kPolyTerms = 26;

using PolyCoeffs = std::array<double, kPolyTerms>;

// c_k = prod_{j<=k} -1 / (4 j (nu + j)), so rho = sum_k c_k s^{2k}.
PolyCoeffs make_coefficients(int n) {
  const double nu = 0.5 * n - 1.0;
  PolyCoeffs c{};
  long double acc = 1.0L;
  c[0] = 1.0;
  for (int k = 1; k < kPolyTerms; ++k) {
    acc *= -1.0L / (4.0L * k * (nu + k));
    c[k] = static_cast<double>(acc);
  }
  return c;
}

const PolyCoeffs& coefficients(int n) {
  static const auto table = [] {
    std::array<PolyCoeffs, Dimension::kMax + 1> t{};
    for (int m = Dimension::kMin; m <= Dimension::kMax; ++m) t[m] = make_coefficients(m);
    return t;
  }();
  return table[n];
}

double rho_series(double nu, double s) {
  using ld = long double;
  const ld q = -static_cast<ld>(s) * s / 4;
  ld term = 1;
  ld sum = 1;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<ld>(k) * (nu + k));
    sum += term;
    if (k > s / 2 && std::fabs(term) < 1e-19L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

double rho_scalar(const Dimension& dim, double s) {
  if (!(s >= 0.0)) throw DomainError("rho: argument must be non-negative");
  if (s <= kPolyLimit) {
    double out = 0.0;
    simd::scalar::even_poly(coefficients(dim.n()), std::span<const double>(&s, 1),
                            std::span<double>(&out, 1));
    return out;
  }
  const double nu = dim.bessel_order();
  if (s <= kSeriesLimit) return rho_series(nu, s);
  return std::tgamma(0.5 * dim.n()) * std::pow(2.0 / s, nu) * bessel_j(nu, s);
}

}  // namespace

double rho(const Dimension& dim, double s) { return rho_scalar(dim, s); }

void rho_batch(const Dimension& dim, std::span<const double> s, std::span<double> out) {
  if (out.size() < s.size()) throw DomainError("rho_batch: output span too short");
  simd::kernels().even_poly(coefficients(dim.n()), s, out.first(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] >= 0.0)) throw DomainError("rho: argument must be non-negative");
    if (s[i] > kPolyLimit) out[i] = rho_scalar(dim, s[i]);
  }
}

double rho_sphere_oracle(const Dimension& dim, double s, int quad_nodes) {
  if (quad_nodes < 8) throw ConfigurationError("rho_sphere_oracle: needs at least 8 nodes");
  if (!(s >= 0.0)) throw DomainError("rho_sphere_oracle: argument must be non-negative");
  const int n = dim.n();
  const GaussLegendreRule& rule = gauss_legendre(quad_nodes);
  // cos(s cos phi) completes about s/pi oscillations on [0, pi].
  const int panels = 1 + static_cast<int>(std::ceil(s / 4.0));
  const double width = std::numbers::pi / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double phi = mid + 0.5 * width * rule.nodes[k];
      panel += rule.weights[k] * std::pow(std::sin(phi), n - 2) * std::cos(s * std::cos(phi));
    }
    total += 0.5 * width * panel;
  }
  return sphere_area(n - 2) / dim.surface_area() * total;
}

double rho_first_zero(const Dimension& dim) {
  constexpr double step = 0.1;
  double lo = 0.0;
  double hi = step;
  while (rho(dim, hi) > 0.0) {
    lo = hi;
    hi += step;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rho(dim, mid) > 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace cutreg
