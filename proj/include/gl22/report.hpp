#pragma once

// Shared vocabulary for named checks and machine-readable reports.

#include <algorithm>
#include <string>
#include <vector>

namespace gl22 {

struct NamedResidual {
  std::string name;
  double value = 0.0;
};

inline double worst(const std::vector<NamedResidual>& rs) {
  double w = 0.0;
  for (const auto& r : rs) w = std::max(w, r.value);
  return w;
}

inline NamedResidual worst_entry(const std::vector<NamedResidual>& rs) {
  NamedResidual w{"none", 0.0};
  for (const auto& r : rs)
    if (r.value >= w.value) w = r;
  return w;
}

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

inline CheckResult make_check(std::string name, double residual, double threshold) {
  const bool ok = residual <= threshold;
  return {std::move(name), residual, threshold, ok};
}

// Aggregates check results; serialised by the CLI as JSON with "schema": 1.
struct Report {
  int schema = 1;
  std::string tool;
  std::string suite;
  unsigned long long seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, double threshold) {
    checks.push_back(make_check(std::move(name), residual, threshold));
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string to_json() const;  // deterministic, insertion-ordered
};

}  // namespace gl22
