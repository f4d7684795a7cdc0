#include "cutreg/simd.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>
#define CUTREG_HAVE_AVX2 1
#else
#define CUTREG_HAVE_AVX2 0
#endif

namespace cutreg::simd::avx2 {

bool compiled() noexcept { return CUTREG_HAVE_AVX2 != 0; }

#if CUTREG_HAVE_AVX2

void even_poly(std::span<const double> coeffs, std::span<const double> s,
               std::span<double> out) {
  const std::size_t last = coeffs.size() - 1;
  const std::size_t n = s.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(s.data() + i);
    const __m256d x = _mm256_mul_pd(v, v);
    __m256d acc = _mm256_set1_pd(coeffs[last]);
    for (std::size_t k = last; k-- > 0;) {
      acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[k]));
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  if (i < n) scalar::even_poly(coeffs, s.subspan(i), out.subspan(i));
}

void cutoff_kernel(const CutoffKernelParams& params, std::span<const double> r2,
                   std::span<double> out) {
  const int pairs = params.power / 2;
  const bool odd = params.power % 2 != 0;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d inner = _mm256_set1_pd(params.inner_radius);
  const __m256d plateau = _mm256_set1_pd(params.plateau);
  const __m256d scale = _mm256_set1_pd(params.scale);
  const std::size_t n = r2.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d sq = _mm256_loadu_pd(r2.data() + i);
    const __m256d r = _mm256_sqrt_pd(sq);
    const __m256d q = _mm256_div_pd(one, sq);
    __m256d p = one;
    for (int j = 0; j < pairs; ++j) p = _mm256_mul_pd(p, q);
    if (odd) p = _mm256_div_pd(p, r);
    const __m256d value = _mm256_mul_pd(p, scale);
    const __m256d inside = _mm256_cmp_pd(r, inner, _CMP_LE_OQ);
    _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(value, plateau, inside));
  }
  if (i < n) scalar::cutoff_kernel(params, r2.subspan(i), out.subspan(i));
}

#else

void even_poly(std::span<const double> coeffs, std::span<const double> s,
               std::span<double> out) {
  scalar::even_poly(coeffs, s, out);
}

void cutoff_kernel(const CutoffKernelParams& params, std::span<const double> r2,
                   std::span<double> out) {
  scalar::cutoff_kernel(params, r2, out);
}

#endif

}  // namespace cutreg::simd::avx2
