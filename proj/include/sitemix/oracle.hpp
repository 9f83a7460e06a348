#pragma once

#include <vector>

#include "sitemix/analytic.hpp"
#include "sitemix/fock.hpp"

namespace sitemix {

enum class Boundary { kPeriodic, kAntiperiodic };

/// 1-D ring with momentum grid k_j = 2 pi (j + beta) / L, beta = 0
/// (periodic) or 1/2 (antiperiodic). The single-particle band is the
/// nearest-neighbour cosine band shifted nonnegative, E(k) = 2 - 2 cos k.
struct LatticeSpec {
  int sites = 2;
  Boundary boundary = Boundary::kPeriodic;

  std::vector<double> momenta() const;
  static double band_energy(double k) { return 2.0 - 2.0 * std::cos(k); }
};

struct FillingSpec {
  int n_up = 0;
  int n_down = 0;
};

/// Boundary condition giving a closed shell at half filling (N = L/2 per
/// spin): antiperiodic for L divisible by 4, periodic otherwise.
Boundary half_filled_boundary(int sites);

/// Whether the lowest `count` band energies are strictly separated from the
/// next one (unique Fermi sea).
bool is_closed_shell(const LatticeSpec& lattice, int count);

/// Slater determinant of the `count` lowest momentum orbitals per spin,
/// stored on the (N_up, N_down) sector. Amplitudes are det(M_up) det(M_down)
/// with M[m][j] = exp(i k_j x_m)/sqrt(L) over occupied momenta and sites.
/// Throws DomainError naming the degenerate momenta on an open shell.
ManyBodyState build_fermi_sea(const LatticeSpec& lattice, const FillingSpec& filling);

/// Multiplies each configuration amplitude by g^(doubly occupied sites) and
/// renormalizes. g = 0 projects out double occupancy exactly; throws
/// DomainError if the projected state vanishes.
ManyBodyState apply_gutzwiller(const ManyBodyState& state, double g);

/// Double occupancy from the log-derivative of the projected norm,
/// d = (1/2L) d log N / d log g, via a centered finite difference with
/// relative step 1e-4. Requires g >= 1e-3.
double gutzwiller_d_via_normalization(const LatticeSpec& lattice,
                                      const FillingSpec& filling, double g);

/// u_k, v_k pair amplitudes of the BCS product state on the lattice grid.
struct BcsAmplitudes {
  std::vector<double> u;
  std::vector<double> v;

  double pair_sum(int sites) const;    // (1/L) sum u_k v_k
  double density(int sites) const;     // (2/L) sum v_k^2
};

BcsAmplitudes bcs_amplitudes(const LatticeSpec& lattice, const BcsParams& params);

/// Product over the momentum grid of (u_k + v_k c+_{k up} c+_{-k down})
/// applied to the vacuum (full 4^L storage; L <= 8). Self-paired momenta
/// (k = -k mod 2 pi) contribute a single factor.
ManyBodyState build_bcs(const LatticeSpec& lattice, const BcsParams& params);

/// Translation-invariant one-hole fully-polarized state lowered l times with
/// the total-spin lowering operator; N_up = L-1-l, N_down = l.
ManyBodyState build_nagaoka_multiplet(int sites, int down_spins);

}  // namespace sitemix
