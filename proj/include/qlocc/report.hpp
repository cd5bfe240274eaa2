// report.hpp
// Check results and suite configuration shared by the verification suites,
// the necessity report, and the CLI's JSON output.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlocc {

struct ToleranceSet {
  double construction = 1e-12;
  double psd = 1e-10;
  double spectral = 1e-9;
};

/// One executed check. `measured` is the violation magnitude unless the
/// params string documents a different pass rule (the weak-resource check is
/// a strict inequality in the other direction). Informational entries carry
/// tolerance 0 and pass = true.
struct CheckResult {
  std::string name;
  int d = 0;
  std::string params;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteConfig {
  std::vector<std::string> suites;  // basis, teleport, discriminate, necessity
  int max_d = 3;
  std::uint64_t seed = 0;
  ToleranceSet tol;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Deterministic order: by name, then d, then params.
  void sort_checks();
};

}  // namespace qlocc
