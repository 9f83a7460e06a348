#include "sitemix/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace sitemix {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShellTol = 1e-9;  // energy gap below which a shell is open

// occupied momentum indices: the `count` lowest band energies (index-ordered
// within exact ties, which only matters when the shell is closed anyway)
std::vector<int> lowest_orbitals(const std::vector<double>& ks, int count) {
  std::vector<int> order(ks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return LatticeSpec::band_energy(ks[a]) < LatticeSpec::band_energy(ks[b]);
  });
  order.resize(count);
  return order;
}

void check_filling(const LatticeSpec& lattice, int count, const char* label) {
  if (count < 0 || count > lattice.sites) {
    std::ostringstream os;
    os << label << " occupation " << count << " outside [0, " << lattice.sites << "]";
    throw DomainError(os.str());
  }
  if (!is_closed_shell(lattice, count)) {
    const auto ks = lattice.momenta();
    std::vector<int> order(ks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return LatticeSpec::band_energy(ks[a]) < LatticeSpec::band_energy(ks[b]);
    });
    std::ostringstream os;
    os << "open shell: degenerate momenta at the Fermi level for " << label
       << " count " << count << " (k = " << ks[order[count - 1]] << " and k = "
       << ks[order[count]] << ", E = "
       << LatticeSpec::band_energy(ks[order[count]]) << ")";
    throw DomainError(os.str());
  }
}

Eigen::MatrixXcd orbital_matrix(const std::vector<double>& occupied_ks,
                                const std::vector<int>& sites, int length) {
  const int m = static_cast<int>(sites.size());
  Eigen::MatrixXcd mat(m, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(length));
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      const double phase = occupied_ks[col] * sites[row];
      mat(row, col) = scale * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return mat;
}

std::vector<int> mask_sites(std::uint32_t mask, int length) {
  std::vector<int> out;
  for (int x = 0; x < length; ++x) {
    if (mask & (1u << x)) out.push_back(x);
  }
  return out;
}

// c+_{k,spin} = (1/sqrt(L)) sum_x exp(i k x) c+_{x,spin}
ManyBodyState momentum_creation(const ManyBodyState& state, double k, Spin spin) {
  const int length = state.sites();
  ManyBodyState out = ManyBodyState::zero_full(length);
  const double scale = 1.0 / std::sqrt(static_cast<double>(length));
  for (int x = 0; x < length; ++x) {
    const Complex coeff =
        scale * Complex(std::cos(k * x), std::sin(k * x));
    out.accumulate(apply_creation(state, x, spin), coeff);
  }
  return out;
}

}  // namespace

std::vector<double> LatticeSpec::momenta() const {
  const double beta = (boundary == Boundary::kAntiperiodic) ? 0.5 : 0.0;
  std::vector<double> ks(sites);
  for (int j = 0; j < sites; ++j) ks[j] = 2.0 * kPi * (j + beta) / sites;
  return ks;
}

Boundary half_filled_boundary(int sites) {
  return (sites % 4 == 0) ? Boundary::kAntiperiodic : Boundary::kPeriodic;
}

bool is_closed_shell(const LatticeSpec& lattice, int count) {
  if (count == 0 || count == lattice.sites) return true;
  const auto ks = lattice.momenta();
  std::vector<double> energies(ks.size());
  std::transform(ks.begin(), ks.end(), energies.begin(), LatticeSpec::band_energy);
  std::sort(energies.begin(), energies.end());
  return energies[count] - energies[count - 1] > kShellTol;
}

ManyBodyState build_fermi_sea(const LatticeSpec& lattice, const FillingSpec& filling) {
  check_filling(lattice, filling.n_up, "up");
  check_filling(lattice, filling.n_down, "down");
  const auto ks = lattice.momenta();
  const auto up_orbitals = lowest_orbitals(ks, filling.n_up);
  const auto down_orbitals = lowest_orbitals(ks, filling.n_down);
  std::vector<double> up_ks, down_ks;
  for (int j : up_orbitals) up_ks.push_back(ks[j]);
  for (int j : down_orbitals) down_ks.push_back(ks[j]);

  ManyBodyState state = ManyBodyState::zero_sector(
      lattice.sites, Sector{filling.n_up, filling.n_down});
  const SpinBasis up_basis(lattice.sites, filling.n_up);
  const SpinBasis down_basis(lattice.sites, filling.n_down);

  std::vector<Complex> down_dets(down_basis.size());
  for (std::size_t i = 0; i < down_basis.size(); ++i) {
    const auto sites = mask_sites(down_basis.mask(i), lattice.sites);
    down_dets[i] = filling.n_down
                       ? orbital_matrix(down_ks, sites, lattice.sites).determinant()
                       : Complex(1.0);
  }
  std::size_t index = 0;
  for (std::size_t iu = 0; iu < up_basis.size(); ++iu) {
    const auto sites = mask_sites(up_basis.mask(iu), lattice.sites);
    const Complex up_det =
        filling.n_up ? orbital_matrix(up_ks, sites, lattice.sites).determinant()
                     : Complex(1.0);
    for (std::size_t id = 0; id < down_basis.size(); ++id) {
      state.set_amplitude(index++, up_det * down_dets[id]);
    }
  }
  state.normalize();
  return state;
}

ManyBodyState apply_gutzwiller(const ManyBodyState& state, double g) {
  if (g < 0.0 || g > 1.0) throw DomainError("apply_gutzwiller: g outside [0, 1]");
  ManyBodyState out = state;
  for (std::size_t i = 0; i < out.dim(); ++i) {
    const int doubles = out.config_at(i).double_count();
    if (doubles == 0) continue;
    out[i] *= (g == 0.0) ? 0.0 : std::pow(g, doubles);
  }
  if (out.norm() == 0.0) {
    throw DomainError(
        "apply_gutzwiller: projection removed the whole state (no "
        "double-occupancy-free support)");
  }
  out.normalize();
  return out;
}

double gutzwiller_d_via_normalization(const LatticeSpec& lattice,
                                      const FillingSpec& filling, double g) {
  if (g < 1e-3 || g > 1.0) {
    throw DomainError(
        "gutzwiller_d_via_normalization: g outside [1e-3, 1] (finite "
        "difference unstable)");
  }
  const ManyBodyState sea = build_fermi_sea(lattice, filling);
  // weight of each double-occupancy count; N(g) = sum_D W_D g^(2D)
  std::vector<double> weight(lattice.sites + 1, 0.0);
  for (std::size_t i = 0; i < sea.dim(); ++i) {
    weight[sea.config_at(i).double_count()] += std::norm(sea.amplitude(i));
  }
  const auto log_norm = [&](double gg) {
    double total = 0.0;
    for (int doubles = 0; doubles <= lattice.sites; ++doubles) {
      total += weight[doubles] * std::pow(gg, 2 * doubles);
    }
    return std::log(total);
  };
  const double h = 1e-4;
  const double dlog = (log_norm(g * (1.0 + h)) - log_norm(g * (1.0 - h))) /
                      std::log((1.0 + h) / (1.0 - h));
  return dlog / (2.0 * lattice.sites);
}

double BcsAmplitudes::pair_sum(int sites) const {
  double total = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) total += u[j] * v[j];
  return total / sites;
}

double BcsAmplitudes::density(int sites) const {
  double total = 0.0;
  for (double vj : v) total += 2.0 * vj * vj;
  return total / sites;
}

BcsAmplitudes bcs_amplitudes(const LatticeSpec& lattice, const BcsParams& params) {
  BcsAmplitudes out;
  for (double k : lattice.momenta()) {
    const double xi = LatticeSpec::band_energy(k) - params.e_f;
    const double gap = (std::abs(xi) <= params.omega_d) ? params.delta0 : 0.0;
    double v2;
    if (gap == 0.0) {
      v2 = (xi < 0.0) ? 1.0 : (xi > 0.0 ? 0.0 : 0.5);
    } else {
      v2 = 0.5 * (1.0 - xi / std::sqrt(xi * xi + gap * gap));
    }
    out.v.push_back(std::sqrt(v2));
    out.u.push_back(std::sqrt(1.0 - v2));
  }
  return out;
}

ManyBodyState build_bcs(const LatticeSpec& lattice, const BcsParams& params) {
  if (lattice.sites > 8) {
    throw DomainError("build_bcs: L <= 8 required (full 4^L storage)");
  }
  const auto ks = lattice.momenta();
  const auto amps = bcs_amplitudes(lattice, params);
  ManyBodyState state = ManyBodyState::vacuum(lattice.sites);
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const double k = ks[j];
    double minus_k = std::fmod(2.0 * kPi - k, 2.0 * kPi);
    // pair factor u + v c+_{k up} c+_{-k down}; the down operator acts first
    ManyBodyState pair = momentum_creation(state, minus_k, Spin::kDown);
    pair = momentum_creation(pair, k, Spin::kUp);
    state.scale(amps.u[j]);
    state.accumulate(pair, amps.v[j]);
  }
  return state;
}

ManyBodyState build_nagaoka_multiplet(int sites, int down_spins) {
  if (sites < 2) throw DomainError("build_nagaoka_multiplet: L >= 2 required");
  if (down_spins < 0 || down_spins > sites - 1) {
    std::ostringstream os;
    os << "build_nagaoka_multiplet: l = " << down_spins << " outside [0, L-1]";
    throw DomainError(os.str());
  }
  ManyBodyState state =
      ManyBodyState::zero_sector(sites, Sector{sites - 1, 0});
  const std::uint32_t full = (1u << sites) - 1u;
  const double amp = 1.0 / std::sqrt(static_cast<double>(sites));
  for (int hole = 0; hole < sites; ++hole) {
    const FockConfig c{full & ~(1u << hole), 0u};
    state.set_amplitude(*state.index_of(c), amp);
  }
  for (int step = 0; step < down_spins; ++step) {
    // total-spin lowering: sum_i c+_{i down} c_{i up}
    const Sector target{state.sector()->n_up - 1, state.sector()->n_down + 1};
    ManyBodyState lowered = ManyBodyState::zero_sector(sites, target);
    for (int i = 0; i < sites; ++i) {
      lowered.accumulate(
          apply_creation(apply_annihilation(state, i, Spin::kUp), i, Spin::kDown),
          Complex(1.0));
    }
    lowered.normalize();
    state = std::move(lowered);
  }
  return state;
}

}  // namespace sitemix
