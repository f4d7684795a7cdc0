#include <cmath>
#include <numbers>

#include "cutreg/specfun.hpp"

namespace cutreg {
namespace {

// Below this argument the ascending series (accumulated in long double) is
// used; above it the Hankel expansion. Both stay below 1e-14 absolute error
// for the supported orders at the switch.
constexpr double kSeriesLimit = 15.0;
constexpr double kMaxArgument = 1e4;
// Smallest Hankel term accepted when the expansion starts to diverge.
constexpr double kAsymptoticAccept = 1e-13;

bool supported_order(double nu) {
  const double twice = 2.0 * nu;
  return twice >= 0.0 && twice <= 10.0 && twice == std::floor(twice);
}

SpecialValue ascending_series(double nu, double s, const AccuracyBudget& budget) {
  using ld = long double;
  const ld x = s;
  const ld q = -(x * x) / 4;
  ld term = std::pow(x / 2, static_cast<ld>(nu)) / std::tgamma(static_cast<ld>(nu) + 1);
  ld sum = term;
  ld largest = std::fabs(term);
  SpecialValue out;
  out.met_budget = false;
  int k = 1;
  for (; k < budget.max_terms; ++k) {
    term *= q / (static_cast<ld>(k) * (nu + k));
    sum += term;
    largest = std::max(largest, std::fabs(term));
    // Terms grow until k ~ s/2; only stop once they are decreasing.
    if (k > x / 2 && std::fabs(term) <= budget.rel_tol * std::fabs(sum) + budget.abs_tol) {
      out.met_budget = true;
      break;
    }
  }
  out.value = static_cast<double>(sum);
  out.error_estimate = static_cast<double>(
      std::fabs(term) + largest * std::numeric_limits<ld>::epsilon() * k);
  out.terms = k + 1;
  return out;
}

SpecialValue hankel_asymptotic(double nu, double x, const AccuracyBudget& budget) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double t = 1.0;
  double previous = INFINITY;
  SpecialValue out;
  out.met_budget = false;
  int k = 1;
  for (; k < budget.max_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = t * (mu - odd * odd) / (k * 8.0 * x);
    if (next == 0.0) {  // half-integer order: the expansion terminates
      t = 0.0;
      out.met_budget = true;
      break;
    }
    if (std::fabs(next) >= previous) {
      // Asymptotic divergence: the smallest term bounds the error.
      out.met_budget = previous <= kAsymptoticAccept;
      break;
    }
    t = next;
    previous = std::fabs(t);
    switch (k % 4) {
      case 0: p += t; break;
      case 1: q += t; break;
      case 2: p -= t; break;
      case 3: q -= t; break;
    }
    if (std::fabs(t) <= budget.rel_tol) {
      out.met_budget = true;
      break;
    }
  }
  const double phase = (0.5 * nu + 0.25) * std::numbers::pi;
  const double cos_phase = std::cos(phase);
  const double sin_phase = std::sin(phase);
  const double cos_x = std::cos(x);
  const double sin_x = std::sin(x);
  // omega = x - phase, expanded so that x itself is never rounded.
  const double cos_omega = cos_x * cos_phase + sin_x * sin_phase;
  const double sin_omega = sin_x * cos_phase - cos_x * sin_phase;
  const double amplitude = std::sqrt(2.0 / (std::numbers::pi * x));
  out.value = amplitude * (p * cos_omega - q * sin_omega);
  out.error_estimate = amplitude * (std::fabs(t) + 4.0 * std::numeric_limits<double>::epsilon());
  out.terms = k;
  return out;
}

}  // namespace

SpecialValue bessel_j_eval(double nu, double s, const AccuracyBudget& budget) {
  budget.validate();
  if (!supported_order(nu)) {
    throw DomainError("bessel_j: order must be one of 0, 1/2, ..., 5");
  }
  if (!(s >= 0.0)) throw DomainError("bessel_j: argument must be non-negative");
  if (s > kMaxArgument) throw DomainError("bessel_j: argument above 1e4");
  if (s == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0, 1, true};
  if (s <= kSeriesLimit) return ascending_series(nu, s, budget);
  return hankel_asymptotic(nu, s, budget);
}

double bessel_j(double nu, double s) {
  const SpecialValue v = bessel_j_eval(nu, s);
  if (!v.met_budget) {
    throw ConvergenceError("bessel_j: accuracy budget not met", v.value, v.error_estimate);
  }
  return v.value;
}

}  // namespace cutreg
