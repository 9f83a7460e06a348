#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "sitemix/types.hpp"

namespace sitemix {

enum class SweepFamily { kGutzwiller, kBcsEpsilon, kBcsConcurrence, kNagaoka };

SweepFamily parse_family(const std::string& name);

/// Declarative 1-D parameter sweep: grid over g, Delta0/omega_D, or l, with
/// one output column per fixed-parameter curve.
struct SweepSpec {
  SweepFamily family = SweepFamily::kGutzwiller;
  double min = 0.0;
  double max = 1.0;
  int steps = 101;
  std::vector<double> densities;  // n curves (gutzwiller, bcs)
  std::vector<double> omega_ef;   // hbar omega_D / E_F curves (bcs)
  int nagaoka_sites = 0;          // N (nagaoka)
  char delimiter = ',';           // ',' csv | '\t' tsv
};

/// Emits a header row then one row per grid point, full double precision,
/// '.' decimal separator. Throws DomainError for out-of-domain parameters.
void run_sweep(const SweepSpec& spec, std::ostream& out);

/// Same, to a file: writes a temporary sibling and renames on success, so a
/// partial sweep is never visible. Throws IoError on filesystem failure.
void run_sweep_to_file(const SweepSpec& spec, const std::filesystem::path& path);

/// One analytic quantity as machine-parseable name=value pairs, in
/// evaluation-chain order (e.g. zeta, d, C for bcs-concurrence).
std::vector<std::pair<std::string, double>> eval_point(
    const std::string& family, const std::map<std::string, double>& params);

/// %.17g formatting shared by sweeps, eval and reports.
std::string format_value(double value);

}  // namespace sitemix
