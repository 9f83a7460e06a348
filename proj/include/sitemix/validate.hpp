#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sitemix {

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;  // worst observed deviation
  bool pass = false;
};

struct ValidationReport {
  int max_sites = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Runs the oracle-vs-analytic invariant suite on lattices up to max_sites.
/// Deterministic for a fixed seed.
ValidationReport run_validate(int max_sites, std::uint64_t seed);

/// One line per check plus a summary; byte-identical for identical inputs.
void write_report(const ValidationReport& report, std::ostream& out);

}  // namespace sitemix
