#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sitemix/sweep.hpp"
#include "sitemix/types.hpp"
#include "sitemix/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

char delimiter_for(const std::string& format) {
  if (format == "csv") return ',';
  if (format == "tsv") return '\t';
  throw sitemix::DomainError("format must be csv or tsv");
}

int run_sweep_command(const sitemix::SweepSpec& spec, const std::string& output) {
  if (output.empty() || output == "-") {
    std::ostringstream buffer;
    sitemix::run_sweep(spec, buffer);
    std::cout << buffer.str();
  } else {
    sitemix::run_sweep_to_file(spec, output);
  }
  return kExitOk;
}

int run_validate_command(int max_sites, std::uint64_t seed,
                         const std::string& output) {
  const sitemix::ValidationReport report = sitemix::run_validate(max_sites, seed);
  if (output.empty() || output == "-") {
    sitemix::write_report(report, std::cout);
  } else {
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw sitemix::IoError("cannot open " + output);
    sitemix::write_report(report, out);
  }
  return report.all_pass() ? kExitOk : kExitValidation;
}

int run_eval_command(const std::string& family,
                     const std::vector<std::string>& assignments,
                     std::map<std::string, double> params) {
  for (const std::string& token : assignments) {
    const auto pos = token.find('=');
    if (pos == std::string::npos) {
      throw sitemix::DomainError("eval expects key=value arguments, got '" +
                                 token + "'");
    }
    try {
      params[token.substr(0, pos)] = std::stod(token.substr(pos + 1));
    } catch (const std::exception&) {
      throw sitemix::DomainError("cannot parse value in '" + token + "'");
    }
  }
  for (const auto& [name, value] : sitemix::eval_point(family, params)) {
    std::cout << name << "=" << sitemix::format_value(value) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global entanglement and on-site concurrence of many-electron "
               "lattice states"};
  app.require_subcommand(1);

  // ---- sweep ----
  auto* sweep = app.add_subcommand(
      "sweep", "Sweep a closed-form quantity over a parameter grid (CSV/TSV)");
  std::string sweep_family = "gutzwiller";
  std::string sweep_format = "csv";
  std::string sweep_output;
  std::vector<double> sweep_n{1.0};
  std::vector<double> sweep_omega{0.1};
  int nagaoka_sites = 0;
  double g_min = 0.0, g_max = 1.0;
  int g_steps = 101;
  double delta_min = 0.0, delta_max = 1.0;
  int delta_steps = 101;
  int l_min = 0, l_max = -1;
  sweep->add_option("--family", sweep_family,
                    "gutzwiller | bcs-epsilon | bcs-concurrence | nagaoka")
      ->required();
  sweep->add_option("--n", sweep_n, "electron densities, one curve each");
  sweep->add_option("--omega-ef", sweep_omega,
                    "hbar omega_D / E_F values (bcs families)");
  sweep->add_option("--g-min", g_min, "gutzwiller grid start");
  sweep->add_option("--g-max", g_max, "gutzwiller grid end");
  sweep->add_option("--g-steps", g_steps, "gutzwiller grid points");
  sweep->add_option("--delta-min", delta_min, "Delta0/omega_D grid start");
  sweep->add_option("--delta-max", delta_max, "Delta0/omega_D grid end");
  sweep->add_option("--delta-steps", delta_steps, "Delta0/omega_D grid points");
  sweep->add_option("--N", nagaoka_sites, "lattice sites (nagaoka)");
  sweep->add_option("--l-min", l_min, "first down-spin count (nagaoka)");
  sweep->add_option("--l-max", l_max, "last down-spin count (nagaoka, default N-1)");
  sweep->add_option("--format", sweep_format, "csv | tsv");
  sweep->add_option("--output", sweep_output, "output path (default stdout)");

  // ---- validate ----
  auto* validate = app.add_subcommand(
      "validate", "Run the exact-enumeration invariant suite");
  int max_sites = 8;
  std::uint64_t seed = 0;
  std::string validate_output;
  validate->add_option("--max-L", max_sites, "largest lattice (2..10)");
  validate->add_option("--seed", seed, "random seed (report is deterministic)");
  validate->add_option("--output", validate_output, "report path (default stdout)");

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "Evaluate one closed-form point");
  std::string eval_family;
  std::vector<std::string> eval_args;
  std::map<std::string, double> eval_params;
  double opt_n = -1.0, opt_g = -1.0, opt_omega = -1.0, opt_delta = -1.0;
  int opt_sites = -1, opt_l = -1;
  eval->add_option("family", eval_family,
                   "gutzwiller | gutzwiller-d | bcs-zeta | bcs-epsilon | "
                   "bcs-concurrence | nagaoka")
      ->required();
  eval->add_option("params", eval_args, "key=value parameters");
  eval->add_option("--n", opt_n, "electron density");
  eval->add_option("--g", opt_g, "projection amplitude");
  eval->add_option("--omega-ef", opt_omega, "hbar omega_D / E_F");
  eval->add_option("--delta-ratio", opt_delta, "Delta0 / (hbar omega_D)");
  eval->add_option("--N", opt_sites, "lattice sites (nagaoka)");
  eval->add_option("--l", opt_l, "down-spin count (nagaoka)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      sitemix::SweepSpec spec;
      spec.family = sitemix::parse_family(sweep_family);
      spec.densities = sweep_n;
      spec.omega_ef = sweep_omega;
      spec.delimiter = delimiter_for(sweep_format);
      if (spec.family == sitemix::SweepFamily::kGutzwiller) {
        spec.min = g_min;
        spec.max = g_max;
        spec.steps = g_steps;
      } else if (spec.family == sitemix::SweepFamily::kNagaoka) {
        spec.nagaoka_sites = nagaoka_sites;
        spec.min = l_min;
        spec.max = (l_max < 0) ? nagaoka_sites - 1 : l_max;
        spec.steps = static_cast<int>(spec.max - spec.min) + 1;
      } else {
        spec.min = delta_min;
        spec.max = delta_max;
        spec.steps = delta_steps;
      }
      return run_sweep_command(spec, sweep_output);
    }
    if (validate->parsed()) {
      return run_validate_command(max_sites, seed, validate_output);
    }
    if (eval->parsed()) {
      if (opt_n >= 0) eval_params["n"] = opt_n;
      if (opt_g >= 0) eval_params["g"] = opt_g;
      if (opt_omega >= 0) eval_params["omega_ef"] = opt_omega;
      if (opt_delta >= 0) eval_params["delta_ratio"] = opt_delta;
      if (opt_sites >= 0) eval_params["N"] = opt_sites;
      if (opt_l >= 0) eval_params["l"] = opt_l;
      return run_eval_command(eval_family, eval_args, eval_params);
    }
  } catch (const sitemix::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const sitemix::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
