#include <cmath>

#include "cutreg/simd.hpp"

namespace cutreg::simd::scalar {

void even_poly(std::span<const double> coeffs, std::span<const double> s,
               std::span<double> out) {
  const std::size_t last = coeffs.size() - 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s[i] * s[i];
    double acc = coeffs[last];
    for (std::size_t k = last; k-- > 0;) acc = acc * x + coeffs[k];
    out[i] = acc;
  }
}

void cutoff_kernel(const CutoffKernelParams& params, std::span<const double> r2,
                   std::span<double> out) {
  const int pairs = params.power / 2;
  const bool odd = params.power % 2 != 0;
  for (std::size_t i = 0; i < r2.size(); ++i) {
    const double r = std::sqrt(r2[i]);
    if (r <= params.inner_radius) {
      out[i] = params.plateau;
      continue;
    }
    const double q = 1.0 / r2[i];
    double p = 1.0;
    for (int j = 0; j < pairs; ++j) p = p * q;
    if (odd) p = p / r;
    out[i] = p * params.scale;
  }
}

}  // namespace cutreg::simd::scalar
