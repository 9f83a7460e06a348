#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sitemix/analytic.hpp"
#include "sitemix/fock.hpp"
#include "sitemix/oracle.hpp"
#include "sitemix/validate.hpp"

namespace py = pybind11;
using namespace sitemix;

namespace {

LatticeSpec make_lattice(int sites, bool antiperiodic) {
  return {sites, antiperiodic ? Boundary::kAntiperiodic : Boundary::kPeriodic};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Global entanglement and on-site concurrence of many-electron "
            "lattice states";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  // closed forms
  m.def(
      "epsilon",
      [](const Eigen::Matrix4cd& rho) { return epsilon(SiteRdm(rho)); },
      py::arg("rho"),
      "Average site mixedness (4/3)(1 - Tr rho^2) of a 4x4 single-site RDM "
      "in the (hole, double, up, down) basis.");
  m.def(
      "site_rdm",
      [](double n_up, double n_down, double d, double zeta) {
        return site_rdm({n_up, n_down, d, zeta}).matrix();
      },
      py::arg("n_up"), py::arg("n_down"), py::arg("d"), py::arg("zeta") = 0.0);
  m.def("gutzwiller_d", &gutzwiller_d, py::arg("g"), py::arg("n"));
  m.def("gutzwiller_epsilon", &gutzwiller_epsilon, py::arg("g"), py::arg("n"));
  m.def(
      "bcs_zeta",
      [](double n, double omega_ef, double delta_ratio) {
        return bcs_zeta({n, delta_ratio * omega_ef, omega_ef, 1.0});
      },
      py::arg("n"), py::arg("omega_ef"), py::arg("delta_ratio"));
  m.def(
      "bcs_epsilon",
      [](double n, double omega_ef, double delta_ratio) {
        return bcs_epsilon({n, delta_ratio * omega_ef, omega_ef, 1.0});
      },
      py::arg("n"), py::arg("omega_ef"), py::arg("delta_ratio"));
  m.def(
      "bcs_concurrence",
      [](double n, double omega_ef, double delta_ratio) {
        const double zeta = bcs_zeta({n, delta_ratio * omega_ef, omega_ef, 1.0});
        return concurrence_x(n, n * n / 4.0 + zeta * zeta, zeta);
      },
      py::arg("n"), py::arg("omega_ef"), py::arg("delta_ratio"));
  m.def("concurrence_x", &concurrence_x, py::arg("n"), py::arg("d"),
        py::arg("zeta"));
  m.def(
      "wootters_concurrence",
      [](const Eigen::Matrix4cd& rho) { return wootters_concurrence(SiteRdm(rho)); },
      py::arg("rho"));
  m.def(
      "nagaoka_epsilon",
      [](int sites, int down_spins) {
        const NagaokaEpsilon eps = nagaoka_epsilon({sites, down_spins});
        return std::make_pair(eps.direct, eps.paper_form);
      },
      py::arg("N"), py::arg("l"),
      "Returns (direct, paper_form); the printed form exceeds the direct "
      "eigenvalue evaluation by exactly 8/(3 N^2).");

  // exact lattice oracle
  m.def(
      "fermi_sea_double_occupancy",
      [](int sites, int n_up, int n_down, bool antiperiodic) {
        return measure_double_occupancy(
            build_fermi_sea(make_lattice(sites, antiperiodic), {n_up, n_down}));
      },
      py::arg("sites"), py::arg("n_up"), py::arg("n_down"),
      py::arg("antiperiodic") = false);
  m.def(
      "gutzwiller_double_occupancy",
      [](int sites, double g) {
        const LatticeSpec lattice{sites, half_filled_boundary(sites)};
        return measure_double_occupancy(
            apply_gutzwiller(build_fermi_sea(lattice, {sites / 2, sites / 2}), g));
      },
      py::arg("sites"), py::arg("g"),
      "Exact double occupancy of the half-filled projected sea on a ring.");
  m.def(
      "bcs_site_rdm",
      [](int sites, double delta0, double omega_d, double e_f, bool antiperiodic) {
        const ManyBodyState state =
            build_bcs(make_lattice(sites, antiperiodic), {1.0, delta0, omega_d, e_f});
        return single_site_rdm(state, sites / 2).matrix();
      },
      py::arg("sites"), py::arg("delta0"), py::arg("omega_d"),
      py::arg("e_f") = 2.0, py::arg("antiperiodic") = false);
  m.def(
      "nagaoka_site_rdm",
      [](int sites, int down_spins) {
        return single_site_rdm(build_nagaoka_multiplet(sites, down_spins),
                               sites / 2)
            .matrix();
      },
      py::arg("sites"), py::arg("l"));
  m.def(
      "validate",
      [](int max_sites, std::uint64_t seed) {
        const ValidationReport report = run_validate(max_sites, seed);
        py::list checks;
        for (const CheckResult& c : report.checks) {
          checks.append(py::make_tuple(c.name, c.tolerance, c.worst, c.pass));
        }
        return py::make_tuple(report.all_pass(), checks);
      },
      py::arg("max_sites") = 6, py::arg("seed") = 0,
      "Runs the invariant suite; returns (all_pass, [(name, tol, worst, pass)]).");
}
