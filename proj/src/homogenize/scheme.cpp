#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cutreg/homogenize.hpp"

namespace cutreg {

MultiIndexScheme MultiIndexScheme::single_half() { return validate_scheme({{1.0, {0.5}}}); }

MultiIndexScheme validate_scheme(std::vector<MultiIndexEntry> raw) {
  if (raw.empty()) throw ConfigurationError("multi-index scheme has no entries");
  double total = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const MultiIndexEntry& e = raw[i];
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ConfigurationError("multi-index scheme: weight of entry " + std::to_string(i) +
                               " is not positive");
    }
    total += e.weight;
    if (e.alpha.empty()) {
      throw ConstraintViolation("multi-index entry " + std::to_string(i) + " is empty", i);
    }
    double sum = 0.0;
    for (double a : e.alpha) {
      if (!(a > 0.0 && a <= 0.5)) {
        throw ConstraintViolation("multi-index entry " + std::to_string(i) +
                                      " has a component outside (0, 1/2]", i);
      }
      sum += a;
    }
    const double slack = 4.0 * e.alpha.size() * std::numeric_limits<double>::epsilon();
    if (2.0 * sum > 1.0 + slack) {
      throw ConstraintViolation("multi-index entry " + std::to_string(i) +
                                    " violates 2 * sum(alpha) <= 1", i);
    }
  }
  if (std::fabs(total - 1.0) > 1e-14) {
    throw ConfigurationError("multi-index scheme: weights must sum to 1");
  }
  return MultiIndexScheme(std::move(raw));
}

MultiIndexScheme parse_alpha_list(std::string_view text) {
  std::vector<std::vector<double>> alphas;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string entry(text.substr(start, end - start));
    std::vector<double> components;
    std::size_t pos = 0;
    while (pos <= entry.size()) {
      const std::size_t comma = std::min(entry.find(',', pos), entry.size());
      const std::string token = entry.substr(pos, comma - pos);
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        throw ConfigurationError("cannot parse multi-index component '" + token + "'");
      }
      if (used != token.size()) {
        throw ConfigurationError("cannot parse multi-index component '" + token + "'");
      }
      components.push_back(value);
      pos = comma + 1;
    }
    alphas.push_back(std::move(components));
    start = end + 1;
  }
  std::vector<MultiIndexEntry> entries;
  const double weight = 1.0 / static_cast<double>(alphas.size());
  for (auto& a : alphas) entries.push_back({weight, std::move(a)});
  return validate_scheme(std::move(entries));
}

}  // namespace cutreg
