#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

#include "cutreg/kernel.hpp"

namespace cutreg {

namespace {

struct ZeroData {};
struct ClosedData {
  Dimension dim;
};
struct SeriesData {
  SeriesScheme scheme;
  Dimension dim;
};
struct TableData {
  std::vector<double> t;
  std::vector<double> values;
  std::vector<double> errors;
};
struct CustomData {
  std::function<double(double)> fn;
};

// Linear interpolation in t = sqrt(s) on an increasing node table.
double interpolate(const std::vector<double>& t, const std::vector<double>& y, double at) {
  if (at <= t.front()) return y.front();
  if (at >= t.back()) return y.back();
  const auto it = std::upper_bound(t.begin(), t.end(), at);
  const std::size_t hi = static_cast<std::size_t>(it - t.begin());
  const std::size_t lo = hi - 1;
  const double w = (at - t[lo]) / (t[hi] - t[lo]);
  return (1.0 - w) * y[lo] + w * y[hi];
}

}  // namespace

struct DeformingFunction::Impl {
  Kind kind;
  std::string descriptor;
  std::vector<double> breakpoints;
  std::variant<ZeroData, ClosedData, SeriesData, TableData, CustomData> data;
};

DeformingFunction::DeformingFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

DeformingFunction DeformingFunction::zero() {
  return DeformingFunction(std::make_shared<const Impl>(Impl{Kind::zero, "zero", {}, ZeroData{}}));
}

DeformingFunction DeformingFunction::closed_form(const Dimension& dim) {
  return DeformingFunction(std::make_shared<const Impl>(
      Impl{Kind::closed_form, "closed(n=" + std::to_string(dim.n()) + ")", {}, ClosedData{dim}}));
}

DeformingFunction DeformingFunction::series(const SeriesScheme& scheme, const Dimension& dim) {
  if (!(scheme.dim() == dim)) throw ConfigurationError("series scheme built for another dimension");
  std::vector<double> kinks;
  for (double r : scheme.radii()) {
    const double s = (r / scheme.r_max()) * (r / scheme.r_max());
    if (s < 1.0) kinks.push_back(s);
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  const std::string name = "series(n=" + std::to_string(dim.n()) +
                           ",N=" + std::to_string(scheme.truncation()) + ")";
  return DeformingFunction(std::make_shared<const Impl>(
      Impl{Kind::series, name, std::move(kinks), SeriesData{scheme, dim}}));
}

DeformingFunction DeformingFunction::tabulated(Kind kind, std::string descriptor,
                                               std::vector<double> t_nodes,
                                               std::vector<double> values,
                                               std::vector<double> std_errors) {
  if (t_nodes.size() < 2 || values.size() != t_nodes.size() ||
      std_errors.size() != t_nodes.size()) {
    throw ConfigurationError("tabulated deforming function: inconsistent table sizes");
  }
  if (t_nodes.front() != 0.0 || t_nodes.back() != 1.0 ||
      !std::is_sorted(t_nodes.begin(), t_nodes.end()) ||
      std::adjacent_find(t_nodes.begin(), t_nodes.end()) != t_nodes.end()) {
    throw ConfigurationError("tabulated deforming function: nodes must increase from 0 to 1");
  }
  std::vector<double> kinks;
  for (std::size_t k = 1; k + 1 < t_nodes.size(); ++k) kinks.push_back(t_nodes[k] * t_nodes[k]);
  return DeformingFunction(std::make_shared<const Impl>(
      Impl{kind, std::move(descriptor), std::move(kinks),
           TableData{std::move(t_nodes), std::move(values), std::move(std_errors)}}));
}

DeformingFunction DeformingFunction::custom(std::string descriptor,
                                            std::function<double(double)> fn,
                                            std::vector<double> breakpoints) {
  return DeformingFunction(std::make_shared<const Impl>(
      Impl{Kind::custom, std::move(descriptor), std::move(breakpoints), CustomData{std::move(fn)}}));
}

double DeformingFunction::operator()(double s) const {
  if (!(s >= 0.0)) throw DomainError("deforming function: argument must be non-negative");
  if (const auto* c = std::get_if<CustomData>(&impl_->data)) return c->fn(s);
  if (s > 1.0) return 0.0;
  return std::visit(
      [s](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZeroData>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, ClosedData>) {
          return deforming_f_closed(d.dim, s);
        } else if constexpr (std::is_same_v<T, SeriesData>) {
          return series_deforming_f(d.scheme, d.dim, s);
        } else if constexpr (std::is_same_v<T, TableData>) {
          return interpolate(d.t, d.values, std::sqrt(s));
        } else {
          return 0.0;
        }
      },
      impl_->data);
}

double DeformingFunction::uncertainty(double s) const {
  const auto* table = std::get_if<TableData>(&impl_->data);
  if (table == nullptr || s > 1.0) return 0.0;
  return interpolate(table->t, table->errors, std::sqrt(s));
}

const std::vector<double>& DeformingFunction::breakpoints() const { return impl_->breakpoints; }

DeformingFunction::Kind DeformingFunction::kind() const { return impl_->kind; }

const std::string& DeformingFunction::descriptor() const { return impl_->descriptor; }

}  // namespace cutreg
