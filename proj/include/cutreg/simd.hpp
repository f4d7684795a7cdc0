#pragma once

#include <span>
#include <string_view>

// Data-parallel inner loops with a scalar reference and vector variants.
//
// Every variant performs the same floating-point operations in the same
// order (no FMA contraction), so all variants return bitwise-identical
// results. The variant is chosen once at start-up from the CPU features;
// setting CUTREG_SIMD=scalar in the environment forces the reference path.

namespace cutreg::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Polynomial in x = s^2 with coefficients c[0] + c[1] x + ... .
/// out[i] = sum_k c[k] s[i]^{2k}, evaluated by Horner's rule.
using EvenPolyFn = void (*)(std::span<const double> coeffs,
                            std::span<const double> s, std::span<double> out);

/// Parameters of the bare cutoff kernel
///   g(r) = plateau                 for r <= inner_radius,
///   g(r) = r^{-power} * scale      otherwise,
/// evaluated from squared radii.
struct CutoffKernelParams {
  int power = 1;  // n - 2
  double inner_radius = 0.0;
  double plateau = 0.0;
  double scale = 1.0;  // 1 / ((n-2) S_{n-1})
};

using CutoffKernelFn = void (*)(const CutoffKernelParams& params,
                                std::span<const double> r2,
                                std::span<double> out);

struct KernelTable {
  Isa isa;
  EvenPolyFn even_poly;
  CutoffKernelFn cutoff_kernel;
};

/// True when the running CPU can execute the given variant.
bool isa_available(Isa isa);

/// Table for a specific variant. Throws std::invalid_argument when the
/// variant is not available on this CPU.
const KernelTable& kernels_for(Isa isa);

/// Table selected at start-up.
const KernelTable& kernels();

namespace scalar {
void even_poly(std::span<const double> coeffs, std::span<const double> s,
               std::span<double> out);
void cutoff_kernel(const CutoffKernelParams& params, std::span<const double> r2,
                   std::span<double> out);
}  // namespace scalar

namespace avx2 {
bool compiled() noexcept;
void even_poly(std::span<const double> coeffs, std::span<const double> s,
               std::span<double> out);
void cutoff_kernel(const CutoffKernelParams& params, std::span<const double> r2,
                   std::span<double> out);
}  // namespace avx2

}  // namespace cutreg::simd
