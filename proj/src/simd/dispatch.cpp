#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cutreg/simd.hpp"

namespace cutreg::simd {
namespace {

constexpr KernelTable kScalarTable{Isa::scalar, &scalar::even_poly, &scalar::cutoff_kernel};
constexpr KernelTable kAvx2Table{Isa::avx2, &avx2::even_poly, &avx2::cutoff_kernel};

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select_at_startup() {
  if (const char* env = std::getenv("CUTREG_SIMD")) {
    if (std::string(env) == "scalar") return kScalarTable;
  }
  if (isa_available(Isa::avx2)) return kAvx2Table;
  return kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return avx2::compiled() && cpu_has_avx2();
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("SIMD variant not available: " + std::string(isa_name(isa)));
  }
  return isa == Isa::avx2 ? kAvx2Table : kScalarTable;
}

const KernelTable& kernels() {
  static const KernelTable& table = select_at_startup();
  return table;
}

}  // namespace cutreg::simd
