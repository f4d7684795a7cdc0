#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "cutreg/criterion.hpp"

namespace cutreg {
namespace {

constexpr std::uint64_t kProbeStream = 1;

template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
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

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::fails: return "fails";
    case Verdict::holds_weak: return "holds_weak";
    case Verdict::holds_strict: return "holds_strict";
  }
  return "unknown";
}

CriterionReport criterion_scan(const Dimension& dim, const DeformingFunction& f,
                               const ScanOptions& options) {
  if (!(options.s_max > 0.0)) throw ConfigurationError("criterion_scan: s_max must be positive");
  if (options.grid_points < 2) throw ConfigurationError("criterion_scan: needs at least 2 grid points");
  if (options.random_probes < 0) throw ConfigurationError("criterion_scan: negative probe count");
  options.spec.validate();

  CriterionReport report{dim, f.descriptor(), {}, {}, {}, 0.0, 0.0, 0.0, std::nullopt,
                         Verdict::holds_weak};
  std::vector<double>& grid = report.s_grid;
  for (int k = 0; k < options.grid_points; ++k) {
    grid.push_back(k == options.grid_points - 1
                       ? options.s_max
                       : options.s_max * k / (options.grid_points - 1));
  }
  RngStream probes(options.seed, kProbeStream);
  for (int k = 0; k < options.random_probes; ++k) grid.push_back(options.s_max * probes.uniform());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::size_t count = grid.size();
  report.phi_values.resize(count);
  report.phi_errors.resize(count);
  std::vector<double> floors(count, 0.0);
  std::vector<char> certified(count, 0);
  const unsigned threads = options.threads != 0 ? options.threads
                                                : std::max(1u, std::thread::hardware_concurrency());

  parallel_for(count, threads, [&](std::size_t i) {
    const PhiValue v = phi(dim, f, grid[i], options.spec);
    report.phi_values[i] = v.value;
    report.phi_errors[i] = v.err;
    if (options.floor_scheme) {
      if (grid[i] == 0.0) {
        floors[i] = 1.0;  // Phi(0) = rho(0) = 1
        certified[i] = 1;
        return;
      }
      try {
        const SeriesScheme& scheme = *options.floor_scheme;
        const StrictnessFloor fl = strictness_floor(scheme, dim, scheme.r_max(), grid[i]);
        floors[i] = fl.floor * grid[i] * grid[i];
        certified[i] = 1;
      } catch (const CertificateUnavailable&) {
        certified[i] = 0;
      }
    }
  });

  const auto it = std::min_element(report.phi_values.begin(), report.phi_values.end());
  report.min_phi = *it;
  report.argmin_s = grid[static_cast<std::size_t>(it - report.phi_values.begin())];
  report.quad_err_max = *std::max_element(report.phi_errors.begin(), report.phi_errors.end());

  if (options.floor_scheme &&
      std::all_of(certified.begin(), certified.end(), [](char c) { return c != 0; })) {
    report.analytic_floor = *std::min_element(floors.begin(), floors.end());
  }

  if (report.min_phi < -report.quad_err_max) {
    report.verdict = Verdict::fails;
  } else if (report.analytic_floor && *report.analytic_floor > 0.0 &&
             report.min_phi > report.quad_err_max) {
    report.verdict = Verdict::holds_strict;
  } else {
    report.verdict = Verdict::holds_weak;
  }
  return report;
}

}  // namespace cutreg
