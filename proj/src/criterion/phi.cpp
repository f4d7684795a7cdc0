#include <algorithm>
#include <cmath>
#include <vector>

#include "cutreg/criterion.hpp"

namespace cutreg {
namespace {

// Width of the initial panels in units of the oscillation scale of rho(ts).
constexpr double kPanelPeriod = 8.0;
// Extracted functions carry Monte Carlo noise; Phi's error band covers
// this many standard errors of the table.
constexpr double kMcSigmas = 4.0;

std::vector<double> radial_cuts(const DeformingFunction& f, double s) {
  const int panels = 1 + static_cast<int>(std::ceil(s / kPanelPeriod));
  std::vector<double> cuts;
  for (int p = 1; p < panels; ++p) cuts.push_back(static_cast<double>(p) / panels);
  for (double b : f.breakpoints()) {
    if (b > 0.0 && b < 1.0) cuts.push_back(std::sqrt(b));
  }
  return cuts;
}

}  // namespace

PhiValue phi(const Dimension& dim, const DeformingFunction& f, double s, const QuadratureSpec& spec) {
  if (!(s >= 0.0)) throw DomainError("phi: requires s >= 0");
  if (s == 0.0) return {1.0, 0.0};
  const double rho_s = rho(dim, s);
  if (f.kind() == DeformingFunction::Kind::zero) return {rho_s, kRhoErrorBound};

  const int n = dim.n();
  const double prefactor = s * s / (n - 2);
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol / std::max(1.0, prefactor);

  double f_max = 0.0;
  std::vector<double> args;
  const BatchIntegrand integrand = [&](std::span<const double> t, std::span<double> out) {
    args.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = t[i] * s;
    rho_batch(dim, args, out);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double fv = f(t[i] * t[i]);
      f_max = std::max(f_max, std::fabs(fv));
      out[i] *= std::pow(t[i], n - 1) * fv;
    }
  };
  const std::vector<double> cuts = radial_cuts(f, s);
  const Integral integral = integrate_batch(integrand, 0.0, 1.0, inner, cuts);

  PhiValue out;
  out.value = prefactor * integral.value + rho_s;
  // Quadrature error, propagated rho evaluation error (int t^{n-1}|f| <= max|f|/n)
  // and the error of rho(s) itself.
  out.err = prefactor * (integral.err_est + kRhoErrorBound * f_max / n) + kRhoErrorBound;

  if (f.kind() == DeformingFunction::Kind::extracted) {
    QuadratureSpec fixed;
    fixed.method = QuadratureMethod::gauss_legendre_fixed;
    const Integral band = integrate(
        [&](double t) {
          return std::pow(t, n - 1) * std::fabs(rho(dim, t * s)) * f.uncertainty(t * t);
        },
        0.0, 1.0, fixed, cuts);
    out.err += prefactor * kMcSigmas * band.value;
  }
  return out;
}

}  // namespace cutreg
