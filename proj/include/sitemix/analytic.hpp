#pragma once

#include "sitemix/site_rdm.hpp"
#include "sitemix/types.hpp"

namespace sitemix {

/// Macroscopic single-site parameters of a many-electron state with
/// conserved spin densities (plus the pairing amplitude zeta for
/// number-nonconserving states). Fully determines the single-site RDM.
struct DensityParams {
  double n_up = 0.0;
  double n_down = 0.0;
  double d = 0.0;     // double-occupancy probability
  double zeta = 0.0;  // on-site pairing amplitude, real >= 0

  double n() const { return n_up + n_down; }
};

/// BCS gap parameters; all energies in units of the Fermi energy e_f.
struct BcsParams {
  double n = 1.0;        // electron density, in (0, 1]
  double delta0 = 0.0;   // gap
  double omega_d = 0.1;  // Debye energy (shell half-width)
  double e_f = 1.0;
};

struct NagaokaParams {
  int sites = 2;      // N
  int down_spins = 0; // l, in [0, N-1]; N_e = N - 1 electrons
};

/// Both readings of the one-hole maximal-spin entanglement. `direct` feeds
/// the RDM eigenvalue list (1/N, 0, 1-(l+1)/N, l/N) through the epsilon
/// formula; `paper_form` is the printed closed form (8(l+1)/3N)(1 - l/N),
/// which exceeds `direct` by exactly 8/(3N^2).
struct NagaokaEpsilon {
  double direct = 0.0;
  double paper_form = 0.0;
};

/// Average site mixedness scaled so a maximally mixed 4-level site gives 1:
/// (4/3) (1 - Tr rho^2). Always in [0, 1].
double epsilon(const SiteRdm& rdm);

/// The 4x4 RDM diag(1-n+d, d, n_up-d, n_down-d) with zeta on the
/// (hole,double) off-diagonal. Validates every eigenvalue and the PSD
/// condition zeta^2 <= d (1-n+d); throws DomainError naming the violation.
SiteRdm site_rdm(const DensityParams& p);

NagaokaEpsilon nagaoka_epsilon(const NagaokaParams& p);

/// paper_form maximum over integer l for a given N.
double nagaoka_max_paper_form(int sites);

/// Double occupancy of the 1-D Gutzwiller state at projection amplitude g
/// and density n (Metzner-Vollhardt). The removable singularity at g=1
/// evaluates to n^2/4.
double gutzwiller_d(double g, double n);

double gutzwiller_epsilon(double g, double n);

/// zeta = (3 n delta0 / 4 e_f) asinh(omega_d / delta0), continuously
/// extended to 0 at delta0 = 0.
double bcs_zeta(const BcsParams& p);

/// site_rdm with n_up = n_down = n/2, d = n^2/4 + zeta^2. Throws
/// "gap too large for density" once n/2 - d <= 0 (the analytic zeta has
/// left its validity domain).
SiteRdm bcs_rdm(const BcsParams& p);

double bcs_epsilon(const BcsParams& p);

/// Closed-form single-site concurrence 2 max(zeta - |n/2 - d|, 0) for the
/// X-shaped RDM with n_up = n_down = n/2.
double concurrence_x(double n, double d, double zeta);

/// General two-qubit spin-flip concurrence of a single-site RDM read as an
/// (up-qubit x down-qubit) state: hole->|00>, double->|11>, up->|10>,
/// down->|01>.
double wootters_concurrence(const SiteRdm& rdm);

}  // namespace sitemix
