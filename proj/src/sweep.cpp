#include "sitemix/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sitemix/analytic.hpp"

namespace sitemix {

namespace {

std::string format_short(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

void check_grid(const SweepSpec& spec) {
  if (!(spec.min < spec.max)) throw DomainError("sweep grid: min < max required");
  if (spec.steps < 2) throw DomainError("sweep grid: steps >= 2 required");
}

double grid_point(const SweepSpec& spec, int i) {
  return spec.min + (spec.max - spec.min) * i / (spec.steps - 1);
}

void sweep_gutzwiller(const SweepSpec& spec, std::ostream& out) {
  check_grid(spec);
  if (spec.densities.empty()) throw DomainError("gutzwiller sweep: no densities");
  out << "g";
  for (double n : spec.densities) out << spec.delimiter << "eps_n" << format_short(n);
  out << "\n";
  for (int i = 0; i < spec.steps; ++i) {
    const double g = grid_point(spec, i);
    out << format_value(g);
    for (double n : spec.densities) {
      out << spec.delimiter << format_value(gutzwiller_epsilon(g, n));
    }
    out << "\n";
  }
}

void sweep_bcs(const SweepSpec& spec, std::ostream& out, bool concurrence) {
  check_grid(spec);
  if (spec.densities.empty() || spec.omega_ef.empty()) {
    throw DomainError("bcs sweep: densities and omega_ef required");
  }
  out << "delta_ratio";
  for (double n : spec.densities) {
    for (double w : spec.omega_ef) {
      out << spec.delimiter << (concurrence ? "C" : "eps") << "_n"
          << format_short(n) << "_w" << format_short(w);
    }
  }
  out << "\n";
  for (int i = 0; i < spec.steps; ++i) {
    const double ratio = grid_point(spec, i);
    out << format_value(ratio);
    for (double n : spec.densities) {
      for (double w : spec.omega_ef) {
        const BcsParams p{n, ratio * w, w, 1.0};
        double value;
        if (concurrence) {
          const double zeta = bcs_zeta(p);
          const double d = n * n / 4.0 + zeta * zeta;
          site_rdm({n / 2.0, n / 2.0, d, zeta});  // domain validation only
          value = concurrence_x(n, d, zeta);
        } else {
          value = bcs_epsilon(p);
        }
        out << spec.delimiter << format_value(value);
      }
    }
    out << "\n";
  }
}

void sweep_nagaoka(const SweepSpec& spec, std::ostream& out) {
  if (spec.nagaoka_sites < 2) throw DomainError("nagaoka sweep: N >= 2 required");
  const int l_min = static_cast<int>(spec.min);
  const int l_max = static_cast<int>(spec.max);
  if (l_min < 0 || l_max > spec.nagaoka_sites - 1 || l_min >= l_max) {
    throw DomainError("nagaoka sweep: l grid outside [0, N-1]");
  }
  out << "l" << spec.delimiter << "eps_direct_N" << spec.nagaoka_sites
      << spec.delimiter << "eps_paper_N" << spec.nagaoka_sites << "\n";
  for (int l = l_min; l <= l_max; ++l) {
    const NagaokaEpsilon eps = nagaoka_epsilon({spec.nagaoka_sites, l});
    out << l << spec.delimiter << format_value(eps.direct) << spec.delimiter
        << format_value(eps.paper_form) << "\n";
  }
}

}  // namespace

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

SweepFamily parse_family(const std::string& name) {
  if (name == "gutzwiller") return SweepFamily::kGutzwiller;
  if (name == "bcs-epsilon") return SweepFamily::kBcsEpsilon;
  if (name == "bcs-concurrence") return SweepFamily::kBcsConcurrence;
  if (name == "nagaoka") return SweepFamily::kNagaoka;
  throw DomainError("unknown sweep family: " + name);
}

void run_sweep(const SweepSpec& spec, std::ostream& out) {
  switch (spec.family) {
    case SweepFamily::kGutzwiller:
      sweep_gutzwiller(spec, out);
      break;
    case SweepFamily::kBcsEpsilon:
      sweep_bcs(spec, out, /*concurrence=*/false);
      break;
    case SweepFamily::kBcsConcurrence:
      sweep_bcs(spec, out, /*concurrence=*/true);
      break;
    case SweepFamily::kNagaoka:
      sweep_nagaoka(spec, out);
      break;
  }
}

void run_sweep_to_file(const SweepSpec& spec, const std::filesystem::path& path) {
  // evaluate fully before any filesystem write, then rename into place
  std::ostringstream buffer;
  run_sweep(spec, buffer);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << buffer.str();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename sweep output into " + path.string());
  }
}

std::vector<std::pair<std::string, double>> eval_point(
    const std::string& family, const std::map<std::string, double>& params) {
  const auto need = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) {
      throw DomainError(std::string("eval ") + family + ": missing parameter '" +
                        key + "'");
    }
    return it->second;
  };
  std::vector<std::pair<std::string, double>> out;
  if (family == "gutzwiller") {
    out.emplace_back("eps", gutzwiller_epsilon(need("g"), need("n")));
  } else if (family == "gutzwiller-d") {
    out.emplace_back("d", gutzwiller_d(need("g"), need("n")));
  } else if (family == "bcs-zeta" || family == "bcs-epsilon" ||
             family == "bcs-concurrence") {
    const double n = need("n");
    const double w = need("omega_ef");
    const BcsParams p{n, need("delta_ratio") * w, w, 1.0};
    const double zeta = bcs_zeta(p);
    out.emplace_back("zeta", zeta);
    if (family == "bcs-epsilon") {
      out.emplace_back("d", n * n / 4.0 + zeta * zeta);
      out.emplace_back("eps", bcs_epsilon(p));
    } else if (family == "bcs-concurrence") {
      const double d = n * n / 4.0 + zeta * zeta;
      site_rdm({n / 2.0, n / 2.0, d, zeta});  // domain validation only
      out.emplace_back("d", d);
      out.emplace_back("C", concurrence_x(n, d, zeta));
    }
  } else if (family == "nagaoka") {
    const NagaokaEpsilon eps = nagaoka_epsilon(
        {static_cast<int>(need("N")), static_cast<int>(need("l"))});
    out.emplace_back("direct", eps.direct);
    out.emplace_back("paper_form", eps.paper_form);
  } else {
    throw DomainError("unknown eval family: " + family);
  }
  return out;
}

}  // namespace sitemix
