#include <cmath>
#include <limits>

#include "cutreg/specfun.hpp"

namespace cutreg {
namespace {

constexpr double kDirectLimit = 0.75;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// (a, b; c) belongs to one of the two families used by f_n, in either order.
bool supported_family(double a, double b, double c) {
  for (int n = Dimension::kMin; n <= Dimension::kMax; ++n) {
    const double lower = 0.5 * (3 - n);
    const bool first = c == 1.5 && ((a == 0.5 && b == lower) || (b == 0.5 && a == lower));
    const double upper = 0.5 * (n - 1);
    const bool second = c == 0.5 * (n + 1) &&
                        ((a == lower && b == upper) || (b == lower && a == upper));
    if (first || second) return true;
  }
  return false;
}

// Power series sum_k (a)_k (b)_k / ((c)_k k!) z^k.
SpecialValue power_series(double a, double b, double c, double z,
                          const AccuracyBudget& budget) {
  double term = 1.0;
  double sum = 1.0;
  double largest = 1.0;
  SpecialValue out;
  out.met_budget = false;
  int k = 0;
  for (; k < budget.max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    largest = std::max(largest, std::fabs(term));
    if (term == 0.0 || std::fabs(term) <= budget.rel_tol * std::fabs(sum) + budget.abs_tol) {
      out.met_budget = true;
      break;
    }
  }
  out.value = sum;
  out.error_estimate = std::fabs(term) + largest * std::numeric_limits<double>::epsilon() * (k + 1);
  out.terms = k + 1;
  return out;
}

SpecialValue gauss_value(double a, double b, double c) {
  const double v = std::tgamma(c) * std::tgamma(c - a - b) /
                   (std::tgamma(c - a) * std::tgamma(c - b));
  return {v, 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(v), 0, true};
}

// Connection to z = 1 for non-integer c - a - b:
//   F(a,b;c;s) = A F(a,b;a+b-c+1;1-s) + (1-s)^{c-a-b} B F(c-a,c-b;c-a-b+1;1-s).
SpecialValue reflected(double a, double b, double c, double s, const AccuracyBudget& budget) {
  const double w = 1.0 - s;
  const double d = c - a - b;
  const double coef_a = std::tgamma(c) * std::tgamma(d) / (std::tgamma(c - a) * std::tgamma(c - b));
  const double coef_b = std::tgamma(c) * std::tgamma(-d) / (std::tgamma(a) * std::tgamma(b));
  const SpecialValue first = power_series(a, b, 1.0 - d, w, budget);
  const SpecialValue second = power_series(c - a, c - b, d + 1.0, w, budget);
  const double scale = std::pow(w, d);
  SpecialValue out;
  out.value = coef_a * first.value + scale * coef_b * second.value;
  out.error_estimate = std::fabs(coef_a) * first.error_estimate +
                       scale * std::fabs(coef_b) * second.error_estimate +
                       4.0 * std::numeric_limits<double>::epsilon() *
                           (std::fabs(coef_a * first.value) + std::fabs(scale * coef_b * second.value));
  out.terms = first.terms + second.terms;
  out.met_budget = first.met_budget && second.met_budget;
  return out;
}

}  // namespace

SpecialValue hyp2f1_eval(double a, double b, double c, double s, const AccuracyBudget& budget) {
  budget.validate();
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("hyp2f1: argument outside [0, 1]");
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a non-positive integer");
  if (s == 0.0) return {1.0, 0.0, 0, true};
  if (!supported_family(a, b, c)) throw DomainError("hyp2f1: unsupported parameter family");

  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    // Terminating: a polynomial of degree -min(a, b) in s.
    const double m = is_nonpositive_integer(a) ? -a : -b;
    double term = 1.0;
    double sum = 1.0;
    double magnitude = 1.0;
    for (int k = 0; k < static_cast<int>(m); ++k) {
      term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * s;
      sum += term;
      magnitude += std::fabs(term);
    }
    return {sum, 2.0 * (m + 1) * std::numeric_limits<double>::epsilon() * magnitude,
            static_cast<int>(m) + 1, true};
  }
  if (s == 1.0) return gauss_value(a, b, c);
  if (s <= kDirectLimit) return power_series(a, b, c, s, budget);
  return reflected(a, b, c, s, budget);
}

double hyp2f1(double a, double b, double c, double s) {
  const SpecialValue v = hyp2f1_eval(a, b, c, s);
  if (!v.met_budget) {
    throw ConvergenceError("hyp2f1: accuracy budget not met", v.value, v.error_estimate);
  }
  return v.value;
}

}  // namespace cutreg
