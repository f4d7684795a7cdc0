#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "cutreg/homogenize.hpp"
#include "cutreg/simd.hpp"

namespace cutreg {
namespace {

constexpr std::size_t kBatch = 256;
// Sampled points closer to the origin than this are redrawn.
constexpr double kOriginGuard = 1e-12;

struct Welford {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }

  McEstimate result(std::size_t rejected) const {
    McEstimate e;
    e.estimate = mean;
    e.samples = count;
    e.rejected = rejected;
    e.std_error = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1) / count) : 0.0;
    return e;
  }
};

}  // namespace

McEstimate merge(const McEstimate& a, const McEstimate& b) {
  if (a.samples == 0) return b;
  if (b.samples == 0) return a;
  const double na = static_cast<double>(a.samples);
  const double nb = static_cast<double>(b.samples);
  const double n = na + nb;
  const double m2a = a.std_error * a.std_error * na * (na - 1.0);
  const double m2b = b.std_error * b.std_error * nb * (nb - 1.0);
  const double delta = b.estimate - a.estimate;
  McEstimate out;
  out.samples = a.samples + b.samples;
  out.rejected = a.rejected + b.rejected;
  out.estimate = a.estimate + delta * nb / n;
  const double m2 = m2a + m2b + delta * delta * na * nb / n;
  out.std_error = std::sqrt(m2 / (n - 1.0) / n);
  return out;
}

McEstimate homogenize_mc(const MultiIndexScheme& scheme, const Dimension& dim, double cutoff,
                         std::span<const double> x, std::size_t samples, RngStream& stream,
                         McEstimator estimator) {
  if (samples < 100) throw ConfigurationError("homogenize_mc: needs at least 100 samples");
  if (!(cutoff > 0.0)) throw DomainError("homogenize_mc: cutoff must be positive");
  const int n = dim.n();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw DomainError("homogenize_mc: point has the wrong dimension");
  }
  const simd::KernelTable& table = simd::kernels();
  const double norm = dim.green_normalisation();

  std::vector<double> totals(kBatch);
  std::vector<double> r2(kBatch);
  std::vector<double> values(kBatch);
  std::vector<double> point(n);
  std::vector<double> draw(n);
  Welford acc;
  std::size_t rejected = 0;

  for (std::size_t done = 0; done < samples; done += kBatch) {
    const std::size_t count = std::min(kBatch, samples - done);
    std::fill(totals.begin(), totals.begin() + count, 0.0);
    for (const MultiIndexEntry& entry : scheme.entries()) {
      const std::size_t k = entry.alpha.size();
      const std::size_t draws = estimator == McEstimator::plain ? 2 * k : 2 * k - 1;
      simd::CutoffKernelParams params;
      params.power = n - 2;
      params.scale = 1.0 / norm;
      if (estimator == McEstimator::conditioned) {
        const double last = cutoff / entry.alpha.back();
        params.inner_radius = 1.0 / last;
        params.plateau = std::pow(last, n - 2) / norm;
      }
      for (std::size_t j = 0; j < count; ++j) {
        for (;;) {
          std::copy(x.begin(), x.end(), point.begin());
          for (std::size_t d = 0; d < draws; ++d) {
            const double radius = entry.alpha[d / 2] / cutoff;
            sample_unit_sphere(dim, stream, draw);
            for (int c = 0; c < n; ++c) point[c] += radius * draw[c];
          }
          double sq = 0.0;
          for (int c = 0; c < n; ++c) sq += point[c] * point[c];
          if (estimator == McEstimator::plain && sq < kOriginGuard * kOriginGuard) {
            ++rejected;
            continue;
          }
          r2[j] = sq;
          break;
        }
      }
      table.cutoff_kernel(params, std::span<const double>(r2.data(), count),
                          std::span<double>(values.data(), count));
      for (std::size_t j = 0; j < count; ++j) totals[j] += entry.weight * values[j];
    }
    for (std::size_t j = 0; j < count; ++j) acc.add(totals[j]);
  }
  return acc.result(rejected);
}

McEstimate homogenize_mc_batched(const MultiIndexScheme& scheme, const Dimension& dim,
                                 double cutoff, std::span<const double> x,
                                 std::size_t samples_per_batch, std::size_t batches,
                                 std::uint64_t seed, unsigned threads, McEstimator estimator) {
  if (batches == 0) throw ConfigurationError("homogenize_mc_batched: needs at least one batch");
  std::vector<McEstimate> parts(batches);
  auto run = [&](std::size_t b) {
    RngStream stream(seed, b);
    parts[b] = homogenize_mc(scheme, dim, cutoff, x, samples_per_batch, stream, estimator);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batches)));
  if (workers == 1) {
    for (std::size_t b = 0; b < batches; ++b) run(b);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t b = w; b < batches; b += workers) run(b);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  McEstimate total;
  for (const McEstimate& p : parts) total = merge(total, p);
  return total;
}

McEstimate extract_deforming(const MultiIndexScheme& scheme, const Dimension& dim, double s,
                             std::size_t samples, RngStream& stream,
                             std::span<const double> direction, McEstimator estimator) {
  if (!(s >= 0.0)) throw DomainError("extract_deforming: argument must be non-negative");
  const int n = dim.n();
  std::vector<double> e(n, 0.0);
  if (direction.empty()) {
    e[0] = 1.0;
  } else {
    if (direction.size() != static_cast<std::size_t>(n)) {
      throw DomainError("extract_deforming: direction has the wrong dimension");
    }
    double norm2 = 0.0;
    for (double v : direction) norm2 += v * v;
    if (std::fabs(norm2 - 1.0) > 1e-12) throw DomainError("extract_deforming: direction is not a unit vector");
    std::copy(direction.begin(), direction.end(), e.begin());
  }
  const double radius = std::sqrt(s);
  for (double& v : e) v *= radius;
  const McEstimate h = homogenize_mc(scheme, dim, 1.0, e, samples, stream, estimator);
  const double norm = dim.green_normalisation();
  const double baseline = s <= 1.0 ? 1.0 : std::pow(s, 1.0 - 0.5 * n);
  McEstimate out = h;
  out.estimate = norm * h.estimate - baseline;
  out.std_error = norm * h.std_error;
  return out;
}

DeformingFunction make_extracted_deforming(const MultiIndexScheme& scheme, const Dimension& dim,
                                           std::size_t samples, std::uint64_t seed, int nodes) {
  if (nodes < 2) throw ConfigurationError("extracted deforming function needs at least 2 nodes");
  std::vector<double> t(nodes + 1);
  std::vector<double> values(nodes + 1);
  std::vector<double> errors(nodes + 1);
  for (int k = 0; k <= nodes; ++k) {
    t[k] = static_cast<double>(k) / nodes;
    RngStream stream(seed, static_cast<std::uint64_t>(k));
    const McEstimate e = extract_deforming(scheme, dim, t[k] * t[k], samples, stream);
    values[k] = e.estimate;
    errors[k] = e.std_error;
  }
  t.back() = 1.0;
  std::ostringstream name;
  name << "extract(n=" << dim.n() << ",alpha=";
  for (std::size_t i = 0; i < scheme.entries().size(); ++i) {
    if (i > 0) name << ';';
    const auto& alpha = scheme.entries()[i].alpha;
    for (std::size_t j = 0; j < alpha.size(); ++j) name << (j > 0 ? "," : "") << alpha[j];
  }
  name << ",samples=" << samples << ",seed=" << seed << ")";
  return DeformingFunction::tabulated(DeformingFunction::Kind::extracted, name.str(), std::move(t),
                                      std::move(values), std::move(errors));
}

}  // namespace cutreg
