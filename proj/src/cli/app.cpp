#include "cutreg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cutreg/criterion.hpp"
#include "cutreg/homogenize.hpp"
#include "emit.hpp"

namespace cutreg::cli {
namespace {

constexpr int kExtractNodes = 32;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CommonOptions {
  int n = 3;
  std::string format = "csv";
  std::string out_path;
};

struct ParsedF {
  DeformingFunction f = DeformingFunction::zero();
  std::optional<SeriesScheme> scheme;
  std::optional<MultiIndexScheme> alphas;
  Json provenance = Json::object();
};

ParsedF parse_f(const std::string& spec, const Dimension& dim, std::size_t samples,
                std::uint64_t seed, double tail_tol) {
  ParsedF parsed;
  if (spec == "zero") {
    parsed.f = DeformingFunction::zero();
  } else if (spec == "closed") {
    parsed.f = DeformingFunction::closed_form(dim);
  } else if (spec == "series") {
    parsed.scheme = SeriesScheme::geometric(dim, tail_tol);
    parsed.f = DeformingFunction::series(*parsed.scheme, dim);
    parsed.provenance["tail_tol"] = tail_tol;
    parsed.provenance["truncation"] = parsed.scheme->truncation();
    parsed.provenance["tail_mass"] = parsed.scheme->tail_mass();
    parsed.provenance["r_max"] = parsed.scheme->r_max();
  } else if (spec.rfind("extract:", 0) == 0) {
    parsed.alphas = parse_alpha_list(std::string_view(spec).substr(8));
    parsed.f = make_extracted_deforming(*parsed.alphas, dim, samples, seed, kExtractNodes);
    parsed.provenance["samples_per_node"] = samples;
    parsed.provenance["nodes"] = kExtractNodes + 1;
    parsed.provenance["seed"] = seed;
  } else {
    throw UsageError("malformed --f '" + spec + "': expected zero, closed, series or extract:<alpha-list>");
  }
  parsed.provenance["descriptor"] = parsed.f.descriptor();
  return parsed;
}

Json quadrature_json(const QuadratureSpec& spec) {
  Json q = Json::object();
  q["method"] = spec.method == QuadratureMethod::adaptive_bisection ? "adaptive_bisection"
                                                                    : "gauss_legendre_fixed";
  q["nodes"] = spec.nodes;
  q["abs_tol"] = spec.abs_tol;
  q["max_depth"] = spec.max_depth;
  return q;
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string f = "closed";
  double s_max = 200.0;
  int grid = 4000;
  int probes = 200;
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
  double tail_tol = 1e-12;
  unsigned threads = 0;
};

int run_check(const CommonOptions& common, const CheckOptions& opt, Document& doc,
              std::ostream& err) {
  const Dimension dim(common.n);
  ParsedF parsed = parse_f(opt.f, dim, opt.samples, opt.seed, opt.tail_tol);
  ScanOptions scan;
  scan.s_max = opt.s_max;
  scan.grid_points = opt.grid;
  scan.random_probes = opt.probes;
  scan.seed = opt.seed;
  scan.threads = opt.threads;
  scan.floor_scheme = parsed.scheme;
  const CriterionReport report = criterion_scan(dim, parsed.f, scan);

  doc.table.columns = {"s", "phi", "err"};
  for (std::size_t i = 0; i < report.s_grid.size(); ++i) {
    doc.table.add_row({report.s_grid[i], report.phi_values[i], report.phi_errors[i]});
  }
  doc.meta["command"] = "check";
  doc.meta["n"] = dim.n();
  doc.meta["f"] = parsed.provenance;
  doc.meta["verdict"] = verdict_name(report.verdict);
  doc.meta["min_phi"] = report.min_phi;
  doc.meta["argmin_s"] = report.argmin_s;
  doc.meta["quad_err_max"] = report.quad_err_max;
  doc.meta["analytic_floor"] = optional_json(report.analytic_floor);
  Json coverage = Json::object();
  coverage["s_max"] = opt.s_max;
  coverage["grid_points"] = opt.grid;
  coverage["random_probes"] = opt.probes;
  coverage["seed"] = opt.seed;
  coverage["note"] = "Phi is examined only at the listed s values in [0, s_max]";
  doc.meta["coverage"] = coverage;
  doc.meta["quadrature"] = quadrature_json(scan.spec);
  doc.meta["rho_error_bound"] = kRhoErrorBound;

  err << "check n=" << dim.n() << " f=" << report.f_descriptor << ": "
      << verdict_name(report.verdict) << " (min_phi=" << format_number(report.min_phi)
      << " at s=" << format_number(report.argmin_s) << ")\n";
  return report.verdict == Verdict::fails ? kExitFail : kExitPass;
}

// ---------------------------------------------------------------------------

int run_fig(int grid, Document& doc) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
  const Dimension dims[] = {Dimension(3), Dimension(4), Dimension(5), Dimension(6)};
  doc.table.columns = {"s", "f_3", "f_4", "f_5", "f_6"};
  for (int k = 0; k < grid; ++k) {
    const double s = k == grid - 1 ? 1.0 : static_cast<double>(k) / (grid - 1);
    std::vector<std::optional<double>> row{s};
    for (const Dimension& d : dims) row.emplace_back(deforming_f_closed(d, s));
    doc.table.add_row(std::move(row));
  }
  doc.meta["command"] = "fig";
  doc.meta["grid_points"] = grid;
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct TableOptions {
  std::string f = "closed";
  std::vector<double> s{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
  double tail_tol = 1e-12;
};

int run_table(const CommonOptions& common, const TableOptions& opt, Document& doc) {
  const Dimension dim(common.n);
  ParsedF parsed = parse_f(opt.f, dim, opt.samples, opt.seed, opt.tail_tol);
  doc.table.columns = {"s", "f", "err"};
  for (double s : opt.s) {
    if (!(s >= 0.0)) throw UsageError("--s values must be non-negative");
    doc.table.add_row({s, parsed.f(s), parsed.f.uncertainty(s)});
  }
  doc.meta["command"] = "table";
  doc.meta["n"] = dim.n();
  doc.meta["f"] = parsed.provenance;
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct HomogOptions {
  std::string f = "extract:0.5";
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  int grid = 10;
  unsigned threads = 1;
  std::string estimator = "conditioned";
};

constexpr std::size_t kMaxBatches = 10;
constexpr double kZLimit = 4.0;

int run_homog(const CommonOptions& common, const HomogOptions& opt, Document& doc,
              std::ostream& err) {
  const Dimension dim(common.n);
  if (opt.f.rfind("extract:", 0) != 0) {
    throw UsageError("homog expects --f extract:<alpha-list>");
  }
  if (opt.samples < 100) throw UsageError("--samples must be at least 100");
  if (opt.grid < 1) throw UsageError("--grid must be at least 1");
  const MultiIndexScheme scheme = parse_alpha_list(std::string_view(opt.f).substr(8));
  const McEstimator estimator =
      opt.estimator == "plain" ? McEstimator::plain : McEstimator::conditioned;

  const auto& entries = scheme.entries();
  const bool has_reference =
      entries.size() == 1 && entries[0].alpha.size() == 1 && entries[0].alpha[0] == 0.5;
  const DeformedGreen reference{dim, 1.0, DeformingFunction::closed_form(dim)};

  const std::size_t batches = std::clamp<std::size_t>(opt.samples / 100, 1, kMaxBatches);
  const std::size_t per_batch = (opt.samples + batches - 1) / batches;

  doc.table.columns = {"radius", "estimate", "std_error", "reference", "z_score"};
  int within = 0;
  for (int k = 0; k < opt.grid; ++k) {
    const double radius = (k + 0.5) / opt.grid;
    std::vector<double> x(static_cast<std::size_t>(dim.n()), 0.0);
    x[0] = radius;
    const McEstimate est = homogenize_mc_batched(scheme, dim, 1.0, x, per_batch, batches,
                                                 opt.seed, opt.threads, estimator);
    std::optional<double> ref;
    std::optional<double> z;
    if (has_reference) {
      ref = reference(radius);
      const double diff = est.estimate - *ref;
      if (est.std_error > 0.0) {
        z = diff / est.std_error;
      } else {
        z = std::fabs(diff) <= 1e-12 * std::fabs(*ref) ? 0.0 : HUGE_VAL;
      }
      if (std::fabs(*z) <= kZLimit) ++within;
    }
    doc.table.add_row({radius, est.estimate, est.std_error, ref, z});
  }

  doc.meta["command"] = "homog";
  doc.meta["n"] = dim.n();
  doc.meta["cutoff"] = 1.0;
  doc.meta["alpha"] = opt.f.substr(8);
  doc.meta["estimator"] = estimator == McEstimator::plain ? "plain" : "conditioned";
  doc.meta["samples"] = per_batch * batches;
  doc.meta["batches"] = batches;
  doc.meta["seed"] = opt.seed;
  if (!has_reference) {
    doc.meta["reference"] = nullptr;
    return kExitPass;
  }
  doc.meta["reference"] = "deformed Green function with the closed-form f_n";
  doc.meta["within_4_sigma"] = within;
  const int needed = static_cast<int>(std::ceil(0.9 * opt.grid));
  err << "homog n=" << dim.n() << ": " << within << "/" << opt.grid
      << " radii within 4 standard errors\n";
  return within >= needed ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------

struct SeriesOptions {
  double s_min = 1e-3;
  double s_max = 1e3;
  int grid = 121;
  double tail_tol = 1e-16;
  double cutoff = 1.0;
  std::vector<double> weights;
  std::vector<double> radii;
};

int run_series(const CommonOptions& common, const SeriesOptions& opt, Document& doc,
               std::ostream& err) {
  const Dimension dim(common.n);
  if (opt.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(opt.s_min > 0.0) || !(opt.s_max > opt.s_min)) {
    throw UsageError("series needs 0 < --s-min < --s-max");
  }
  if (!(opt.cutoff > 0.0)) throw UsageError("--cutoff must be positive");
  if (opt.weights.size() != opt.radii.size()) {
    throw UsageError("--weights and --radii must have the same length");
  }
  const SeriesScheme scheme = opt.weights.empty()
                                  ? SeriesScheme::geometric(dim, opt.tail_tol)
                                  : SeriesScheme::from_terms(dim, opt.weights, opt.radii);

  doc.table.columns = {"s", "density", "tail_bound", "floor", "index_j"};
  std::vector<double> uncovered;
  bool ok = true;
  const double log_lo = std::log10(opt.s_min);
  const double log_hi = std::log10(opt.s_max);
  for (int k = 0; k < opt.grid; ++k) {
    const double s = k == 0 ? opt.s_min
                     : k == opt.grid - 1
                         ? opt.s_max
                         : std::pow(10.0, log_lo + (log_hi - log_lo) * k / (opt.grid - 1));
    const SeriesDensity density = series_fourier_density(scheme, dim, opt.cutoff, s);
    if (!(density.value > 0.0)) ok = false;
    try {
      const StrictnessFloor fl = strictness_floor(scheme, dim, opt.cutoff, s);
      if (!(fl.floor > 0.0) || fl.floor > density.value) ok = false;
      doc.table.add_row({s, density.value, density.tail_bound, fl.floor,
                         static_cast<double>(fl.index)});
    } catch (const CertificateUnavailable&) {
      uncovered.push_back(s);
      doc.table.add_row({s, density.value, density.tail_bound, std::nullopt, std::nullopt});
    }
  }

  doc.meta["command"] = "series";
  doc.meta["n"] = dim.n();
  doc.meta["cutoff"] = opt.cutoff;
  Json sch = Json::object();
  sch["kind"] = opt.weights.empty() ? "geometric" : "explicit";
  if (opt.weights.empty()) sch["tail_tol"] = opt.tail_tol;
  sch["truncation"] = scheme.truncation();
  sch["tail_mass"] = scheme.tail_mass();
  sch["r_max"] = scheme.r_max();
  doc.meta["scheme"] = sch;
  doc.meta["first_zero"] = rho_first_zero(dim);
  doc.meta["uncovered_s"] = uncovered;

  if (!uncovered.empty()) {
    err << "series: no certificate at " << uncovered.size() << " s values:";
    for (double s : uncovered) err << ' ' << format_number(s);
    err << "\n";
    return kExitFail;
  }
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--n", common.n, "Dimension n (3..12)");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", common.out_path, "Write the document to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cutoff-regularised Green functions and their positivity criterion", "cutreg"};
  app.require_subcommand(1);
  CommonOptions common;

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Scan the positivity criterion");
  add_common(check_cmd, common);
  check_cmd->add_option("--f", check.f, "zero | closed | series | extract:<alpha-list>");
  check_cmd->add_option("--s-max", check.s_max, "Upper end of the scan");
  check_cmd->add_option("--grid", check.grid, "Uniform grid points");
  check_cmd->add_option("--probes", check.probes, "Random probe points");
  check_cmd->add_option("--seed", check.seed, "Random seed");
  check_cmd->add_option("--samples", check.samples, "Samples per node for extract:");
  check_cmd->add_option("--tail-tol", check.tail_tol, "Series truncation tolerance");
  check_cmd->add_option("--threads", check.threads, "Worker threads (0 = all cores)");

  int fig_grid = 101;
  auto* fig_cmd = app.add_subcommand("fig", "Tabulate f_3..f_6 on [0, 1]");
  add_common(fig_cmd, common);
  fig_cmd->add_option("--grid", fig_grid, "Grid points");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Evaluate a deforming function");
  add_common(table_cmd, common);
  table_cmd->add_option("--f", table.f, "zero | closed | series | extract:<alpha-list>");
  table_cmd->add_option("--s", table.s, "Comma-separated arguments")->delimiter(',');
  table_cmd->add_option("--seed", table.seed, "Random seed");
  table_cmd->add_option("--samples", table.samples, "Samples per node for extract:");
  table_cmd->add_option("--tail-tol", table.tail_tol, "Series truncation tolerance");

  HomogOptions homog;
  auto* homog_cmd = app.add_subcommand("homog", "Monte Carlo homogenisation vs closed form");
  add_common(homog_cmd, common);
  homog_cmd->add_option("--f", homog.f, "extract:<alpha-list>");
  homog_cmd->add_option("--samples", homog.samples, "Total samples per radius");
  homog_cmd->add_option("--seed", homog.seed, "Random seed");
  homog_cmd->add_option("--grid", homog.grid, "Number of radii in (0, 1)");
  homog_cmd->add_option("--threads", homog.threads, "Worker threads");
  homog_cmd->add_option("--estimator", homog.estimator, "plain | conditioned")
      ->check(CLI::IsMember({"plain", "conditioned"}));

  SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Series density and strictness floor");
  add_common(series_cmd, common);
  series_cmd->add_option("--s-min", series.s_min, "Lower end of the log grid");
  series_cmd->add_option("--s-max", series.s_max, "Upper end of the log grid");
  series_cmd->add_option("--grid", series.grid, "Log grid points");
  series_cmd->add_option("--tail-tol", series.tail_tol, "Truncation tolerance");
  series_cmd->add_option("--cutoff", series.cutoff, "Cutoff N");
  series_cmd->add_option("--weights", series.weights, "Explicit weights")->delimiter(',');
  series_cmd->add_option("--radii", series.radii, "Explicit radii")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Document doc;
  int code = kExitPass;
  try {
    if (check_cmd->parsed()) {
      code = run_check(common, check, doc, err);
    } else if (fig_cmd->parsed()) {
      code = run_fig(fig_grid, doc);
    } else if (table_cmd->parsed()) {
      code = run_table(common, table, doc);
    } else if (homog_cmd->parsed()) {
      code = run_homog(common, homog, doc, err);
    } else {
      code = run_series(common, series, doc, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstraintViolation& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }

  const Format format = common.format == "json" ? Format::json : Format::csv;
  if (common.out_path.empty()) {
    write_document(doc, format, out);
  } else {
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << common.out_path << " for writing\n";
      return kExitUsage;
    }
    write_document(doc, format, file);
  }
  return code;
}

}  // namespace cutreg::cli
