#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "cutreg/numerics.hpp"

namespace cutreg {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

GaussLegendreRule compute_rule(int k) {
  GaussLegendreRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) {
        // one more pass for the derivative at the converged root
        p0 = 1.0;
        p1 = x;
        for (int j = 2; j <= k; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = k * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[k - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[k - 1 - i] = w;
  }
  if (k % 2 == 1) rule.nodes[k / 2] = 0.0;
  return rule;
}

struct PanelSum {
  double value = 0.0;
  double abs_value = 0.0;
};

class PanelEvaluator {
 public:
  PanelEvaluator(const BatchIntegrand& f, const GaussLegendreRule& rule)
      : f_(f), rule_(rule), t_(rule.nodes.size()), y_(rule.nodes.size()) {}

  PanelSum operator()(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < t_.size(); ++i) t_[i] = mid + half * rule_.nodes[i];
    f_(t_, y_);
    PanelSum s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      s.value += rule_.weights[i] * y_[i];
      s.abs_value += rule_.weights[i] * std::fabs(y_[i]);
    }
    s.value *= half;
    s.abs_value *= half;
    return s;
  }

 private:
  const BatchIntegrand& f_;
  const GaussLegendreRule& rule_;
  std::vector<double> t_;
  std::vector<double> y_;
};

struct Accumulator {
  Integral total;
  bool converged = true;
};

void refine(PanelEvaluator& eval, const QuadratureSpec& spec, double total_width,
            double lo, double hi, const PanelSum& coarse, int depth, Accumulator& acc) {
  const double mid = 0.5 * (lo + hi);
  const PanelSum left = eval(lo, mid);
  const PanelSum right = eval(mid, hi);
  const double fine = left.value + right.value;
  const double fine_abs = left.abs_value + right.abs_value;
  const double diff = std::fabs(fine - coarse.value);
  const double share = spec.abs_tol * (hi - lo) / total_width;
  const double rounding = 16.0 * kEps * fine_abs;
  if (diff <= std::max(share, rounding) || depth >= spec.max_depth) {
    if (diff > std::max(share, rounding)) acc.converged = false;
    acc.total.value += fine;
    acc.total.abs_value += fine_abs;
    acc.total.err_est += diff + rounding;
    return;
  }
  refine(eval, spec, total_width, lo, mid, left, depth + 1, acc);
  refine(eval, spec, total_width, mid, hi, right, depth + 1, acc);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (nodes < 4 || nodes > 512) throw ConfigurationError("quadrature nodes must lie in [4, 512]");
  if (!(abs_tol > 0.0)) throw ConfigurationError("quadrature abs_tol must be positive");
  if (max_depth < 0 || max_depth > 40) throw ConfigurationError("quadrature max_depth must lie in [0, 40]");
}

const GaussLegendreRule& gauss_legendre(int k) {
  if (k < 1 || k > 512) throw ConfigurationError("Gauss-Legendre order must lie in [1, 512]");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<const GaussLegendreRule>(compute_rule(k));
  return *slot;
}

Integral integrate_batch(const BatchIntegrand& f, double a, double b,
                         const QuadratureSpec& spec, std::span<const double> breakpoints) {
  spec.validate();
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return {};

  std::vector<double> cuts{a};
  std::vector<double> interior;
  for (double p : breakpoints) {
    if (p > a && p < b) interior.push_back(p);
  }
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  cuts.insert(cuts.end(), interior.begin(), interior.end());
  cuts.push_back(b);

  const GaussLegendreRule& rule = gauss_legendre(spec.nodes);
  PanelEvaluator eval(f, rule);
  Accumulator acc;

  if (spec.method == QuadratureMethod::gauss_legendre_fixed) {
    const GaussLegendreRule& lower = gauss_legendre(std::max(2, spec.nodes / 2));
    PanelEvaluator eval_lower(f, lower);
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      const PanelSum hi = eval(cuts[p], cuts[p + 1]);
      const PanelSum lo = eval_lower(cuts[p], cuts[p + 1]);
      acc.total.value += hi.value;
      acc.total.abs_value += hi.abs_value;
      acc.total.err_est += std::fabs(hi.value - lo.value) + 16.0 * kEps * hi.abs_value;
    }
    return acc.total;
  }

  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const PanelSum coarse = eval(cuts[p], cuts[p + 1]);
    refine(eval, spec, b - a, cuts[p], cuts[p + 1], coarse, 0, acc);
  }
  if (!acc.converged) {
    throw ConvergenceError("integrate: max_depth reached before abs_tol",
                           acc.total.value, acc.total.err_est);
  }
  return acc.total;
}

}  // namespace cutreg
