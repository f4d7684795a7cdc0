#include <cmath>

#include "cutreg/numerics.hpp"

namespace cutreg {
namespace {

std::seed_seq make_seed(std::uint64_t seed, std::uint64_t stream_id) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream_id),
                       static_cast<std::uint32_t>(stream_id >> 32), 0x9e3779b9u};
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  auto seq = make_seed(seed, stream_id);
  engine_.seed(seq);
}

double RngStream::normal() { return normal_(engine_); }

double RngStream::uniform() { return std::generate_canonical<double, 53>(engine_); }

void sample_unit_sphere(const Dimension& dim, RngStream& stream, std::span<double> out) {
  const int n = dim.n();
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      out[i] = stream.normal();
      norm2 += out[i] * out[i];
    }
  } while (norm2 < 1e-300);
  const double inv = 1.0 / std::sqrt(norm2);
  for (int i = 0; i < n; ++i) out[i] *= inv;
}

std::vector<double> sample_unit_sphere(const Dimension& dim, RngStream& stream) {
  std::vector<double> out(dim.n());
  sample_unit_sphere(dim, stream, out);
  return out;
}

}  // namespace cutreg
