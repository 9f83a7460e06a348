#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "sitemix/analytic.hpp"
#include "sitemix/sweep.hpp"
#include "sitemix/validate.hpp"

using namespace sitemix;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

SweepSpec gutzwiller_curves_spec() {
  SweepSpec spec;
  spec.family = SweepFamily::kGutzwiller;
  spec.min = 0.0;
  spec.max = 1.0;
  spec.steps = 101;
  spec.densities = {1.0, 0.75, 0.5, 0.25};
  return spec;
}

}  // namespace

TEST_CASE("gutzwiller sweep: header, endpoints, crossing property") {
  std::ostringstream out;
  run_sweep(gutzwiller_curves_spec(), out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == "g,eps_n1,eps_n0.75,eps_n0.5,eps_n0.25");

  const auto first = split(rows[1], ',');
  const auto last = split(rows[101], ',');
  CHECK(std::stod(first[0]) == 0.0);
  CHECK(std::stod(last[0]) == 1.0);
  CHECK(std::stod(first[1]) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::stod(last[1]) == doctest::Approx(1.0).epsilon(1e-15));
  // small-n inversion: at n = 0.25 the g=0 end exceeds the g=1 end
  CHECK(std::stod(first[4]) > std::stod(last[4]));
  CHECK(std::stod(first[1]) < std::stod(last[1]));
}

TEST_CASE("sweep output is deterministic and parses back bit-for-bit") {
  std::ostringstream a, b;
  run_sweep(gutzwiller_curves_spec(), a);
  run_sweep(gutzwiller_curves_spec(), b);
  CHECK(a.str() == b.str());

  const auto rows = lines_of(a.str());
  const auto header = split(rows[0], ',');
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto fields = split(rows[r], ',');
    REQUIRE(fields.size() == header.size());
    const double g = std::stod(fields[0]);
    const std::vector<double> densities{1.0, 0.75, 0.5, 0.25};
    for (std::size_t c = 1; c < fields.size(); ++c) {
      CHECK(format_value(gutzwiller_epsilon(g, densities[c - 1])) == fields[c]);
    }
  }
}

TEST_CASE("bcs epsilon sweep starts at the metallic value and decreases") {
  SweepSpec spec;
  spec.family = SweepFamily::kBcsEpsilon;
  spec.steps = 101;
  spec.densities = {1.0};
  spec.omega_ef = {0.1};
  std::ostringstream out;
  run_sweep(spec, out);
  const auto rows = lines_of(out.str());
  CHECK(rows[0] == "delta_ratio,eps_n1_w0.1");
  double prev = 2.0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double eps = std::stod(split(rows[r], ',')[1]);
    CHECK(eps <= prev + 1e-15);
    prev = eps;
  }
  CHECK(std::stod(split(rows[1], ',')[1]) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bcs concurrence sweep: zero below the onset, positive past it") {
  SweepSpec spec;
  spec.family = SweepFamily::kBcsConcurrence;
  spec.steps = 101;
  spec.densities = {1.0};
  spec.omega_ef = {0.5};
  std::ostringstream out;
  run_sweep(spec, out);
  const auto rows = lines_of(out.str());
  CHECK(rows[0] == "delta_ratio,C_n1_w0.5");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto fields = split(rows[r], ',');
    const double ratio = std::stod(fields[0]);
    const double c = std::stod(fields[1]);
    if (ratio < 0.272) CHECK(c == 0.0);
    if (ratio > 0.28) CHECK(c > 0.0);
  }
}

TEST_CASE("nagaoka sweep lists both readings") {
  SweepSpec spec;
  spec.family = SweepFamily::kNagaoka;
  spec.nagaoka_sites = 4;
  spec.min = 0;
  spec.max = 3;
  spec.steps = 4;
  std::ostringstream out;
  run_sweep(spec, out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "l,eps_direct_N4,eps_paper_N4");
  const auto l1 = split(rows[2], ',');
  CHECK(std::stod(l1[0]) == 1.0);
  CHECK(std::stod(l1[2]) - std::stod(l1[1]) ==
        doctest::Approx(8.0 / 48.0).epsilon(1e-14));
}

TEST_CASE("tsv output uses tabs") {
  SweepSpec spec = gutzwiller_curves_spec();
  spec.delimiter = '\t';
  spec.steps = 2;
  std::ostringstream out;
  run_sweep(spec, out);
  CHECK(lines_of(out.str())[0] == "g\teps_n1\teps_n0.75\teps_n0.5\teps_n0.25");
}

TEST_CASE("file output appears atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sitemix_sweep_test";
  fs::create_directories(dir);
  const fs::path target = dir / "fig1.csv";

  SweepSpec spec = gutzwiller_curves_spec();
  spec.steps = 11;
  run_sweep_to_file(spec, target);
  CHECK(fs::exists(target));
  CHECK(!fs::exists(target.string() + ".tmp"));
  std::ostringstream expect;
  run_sweep(spec, expect);
  std::ifstream in(target, std::ios::binary);
  std::stringstream got;
  got << in.rdbuf();
  CHECK(got.str() == expect.str());

  // an invalid spec must not leave any file behind
  SweepSpec bad = spec;
  bad.steps = 1;
  const fs::path target2 = dir / "bad.csv";
  CHECK_THROWS_AS(run_sweep_to_file(bad, target2), DomainError);
  CHECK(!fs::exists(target2));
  CHECK(!fs::exists(target2.string() + ".tmp"));
  fs::remove_all(dir);
}

TEST_CASE("sweep specs are validated") {
  SweepSpec spec = gutzwiller_curves_spec();
  spec.steps = 1;
  std::ostringstream out;
  CHECK_THROWS_AS(run_sweep(spec, out), DomainError);
  spec = gutzwiller_curves_spec();
  spec.min = 0.9;
  spec.max = 0.1;
  CHECK_THROWS_AS(run_sweep(spec, out), DomainError);
  spec = gutzwiller_curves_spec();
  spec.densities = {1.5};  // out of the analytic domain
  CHECK_THROWS_AS(run_sweep(spec, out), DomainError);
}

TEST_CASE("eval_point follows the evaluation chains") {
  const auto d = eval_point("gutzwiller-d", {{"g", 0.5}, {"n", 1.0}});
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == "d");
  CHECK(d[0].second == doctest::Approx(0.14139874691553125).epsilon(1e-14));

  const auto conc = eval_point("bcs-concurrence",
                               {{"n", 1.0}, {"omega_ef", 0.5}, {"delta_ratio", 0.5}});
  REQUIRE(conc.size() == 3);
  CHECK(conc[0].first == "zeta");
  CHECK(conc[0].second == doctest::Approx(0.27068165159602694).epsilon(1e-13));
  CHECK(conc[1].second == doctest::Approx(0.32326855651075291).epsilon(1e-13));
  CHECK(conc[2].first == "C");
  CHECK(conc[2].second == doctest::Approx(0.1879004162135597).epsilon(1e-12));

  const auto nag = eval_point("nagaoka", {{"N", 4.0}, {"l", 1.0}});
  REQUIRE(nag.size() == 2);
  CHECK(nag[1].second - nag[0].second == doctest::Approx(8.0 / 48.0).epsilon(1e-14));

  CHECK_THROWS_AS(eval_point("gutzwiller-d", {{"g", 0.5}}), DomainError);
  CHECK_THROWS_AS(eval_point("unknown", {}), DomainError);
}

TEST_CASE("validation report is deterministic and passes at small L") {
  const ValidationReport report = run_validate(4, 7);
  CHECK(report.all_pass());
  std::ostringstream a, b;
  write_report(report, a);
  write_report(run_validate(4, 7), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("result: PASS") != std::string::npos);

  CHECK_THROWS_AS(run_validate(1, 0), DomainError);
  CHECK_THROWS_AS(run_validate(11, 0), DomainError);
}
