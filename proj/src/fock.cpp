#include "sitemix/fock.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <sstream>
#include <unordered_map>

namespace sitemix {

namespace {

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

std::uint32_t low_mask(int site) { return (1u << site) - 1u; }

double sign_from_parity(int p) { return p ? -1.0 : 1.0; }

void check_sites(int sites) {
  if (sites < 1 || sites > kMaxSites) {
    std::ostringstream os;
    os << "site count " << sites << " outside [1, " << kMaxSites << "]";
    throw DomainError(os.str());
  }
}

void check_site_index(const ManyBodyState& state, int site) {
  if (site < 0 || site >= state.sites()) {
    std::ostringstream os;
    os << "site index " << site << " out of range for L=" << state.sites();
    throw DomainError(os.str());
  }
}

void check_normalized(const ManyBodyState& state, const char* op) {
  const double dev = std::abs(state.norm() - 1.0);
  if (dev > tol::kNormGate) {
    std::ostringstream os;
    os << op << ": state not normalized (|norm-1| = " << dev << ")";
    throw DomainError(os.str());
  }
}

// Sign that factors the local operators of `site` out to the front of the
// canonical operator string, so that <a, env|psi> = sign * amplitude(config).
double detach_sign(const FockConfig& c, int site) {
  const bool has_up = (c.up >> site) & 1u;
  const bool has_down = (c.down >> site) & 1u;
  const std::uint32_t low = low_mask(site);
  if (!has_up && !has_down) return 1.0;
  if (has_up && !has_down) return sign_from_parity(parity(c.up & low));
  if (!has_up && has_down)
    return sign_from_parity(parity(c.up) ^ parity(c.down & low));
  // double occupancy: move c+_up to the front, then c+_down right behind it;
  // the down operator passes every other up mode (popcount(up) - 1 of them).
  const int p = parity(c.up & low) ^ parity(c.down & low) ^ parity(c.up) ^ 1;
  return sign_from_parity(p);
}

}  // namespace

int FockConfig::double_count() const { return std::popcount(up & down); }

SpinBasis::SpinBasis(int sites, int count) {
  const std::uint32_t space = 1u << sites;
  rank_.assign(space, -1);
  for (std::uint32_t m = 0; m < space; ++m) {
    if (std::popcount(m) == count) {
      rank_[m] = static_cast<std::int32_t>(masks_.size());
      masks_.push_back(m);
    }
  }
}

ManyBodyState::ManyBodyState(int sites, std::optional<Sector> sector)
    : sites_(sites), sector_(sector) {
  check_sites(sites);
  if (sector_) {
    if (sector_->n_up < 0 || sector_->n_up > sites || sector_->n_down < 0 ||
        sector_->n_down > sites) {
      throw DomainError("sector occupation outside [0, L]");
    }
    up_basis_ = std::make_shared<SpinBasis>(sites, sector_->n_up);
    down_basis_ = std::make_shared<SpinBasis>(sites, sector_->n_down);
    amp_.assign(up_basis_->size() * down_basis_->size(), Complex(0.0));
  } else {
    amp_.assign(std::size_t(1) << (2 * sites), Complex(0.0));
  }
}

ManyBodyState ManyBodyState::zero_full(int sites) {
  return ManyBodyState(sites, std::nullopt);
}

ManyBodyState ManyBodyState::zero_sector(int sites, Sector sector) {
  return ManyBodyState(sites, sector);
}

ManyBodyState ManyBodyState::vacuum(int sites) {
  ManyBodyState s(sites, std::nullopt);
  s.amp_[0] = Complex(1.0);
  return s;
}

FockConfig ManyBodyState::config_at(std::size_t index) const {
  if (sector_) {
    const std::size_t nd = down_basis_->size();
    return {up_basis_->mask(index / nd), down_basis_->mask(index % nd)};
  }
  return {static_cast<std::uint32_t>(index >> sites_),
          static_cast<std::uint32_t>(index & ((std::size_t(1) << sites_) - 1))};
}

std::optional<std::size_t> ManyBodyState::index_of(const FockConfig& c) const {
  if (sector_) {
    const std::int32_t ru = up_basis_->rank(c.up);
    const std::int32_t rd = down_basis_->rank(c.down);
    if (ru < 0 || rd < 0) return std::nullopt;
    return static_cast<std::size_t>(ru) * down_basis_->size() +
           static_cast<std::size_t>(rd);
  }
  return (static_cast<std::size_t>(c.up) << sites_) | c.down;
}

double ManyBodyState::norm() const {
  double sum = 0.0;
  for (const Complex& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

void ManyBodyState::normalize() {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize a zero state");
  const double inv = 1.0 / n;
  for (Complex& a : amp_) a *= inv;
}

void ManyBodyState::accumulate(const ManyBodyState& other, Complex coeff) {
  if (other.sites_ != sites_ || other.sector_ != sector_) {
    throw DomainError("accumulate: state layouts differ");
  }
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += coeff * other.amp_[i];
}

void ManyBodyState::scale(Complex factor) {
  for (Complex& a : amp_) a *= factor;
}

ManyBodyState apply_creation(const ManyBodyState& state, int site, Spin spin) {
  check_site_index(state, site);
  std::optional<Sector> out_sector = state.sector();
  if (out_sector) {
    int& occ = (spin == Spin::kUp) ? out_sector->n_up : out_sector->n_down;
    occ += 1;
    if (occ > state.sites()) {
      // spin species already full: c+ annihilates every configuration;
      // keep the source sector tag for the zero result
      return ManyBodyState::zero_sector(state.sites(), *state.sector());
    }
  }
  ManyBodyState out = out_sector
                          ? ManyBodyState::zero_sector(state.sites(), *out_sector)
                          : ManyBodyState::zero_full(state.sites());
  const std::uint32_t bit = 1u << site;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex(0.0)) continue;
    FockConfig c = state.config_at(i);
    double sign;
    if (spin == Spin::kUp) {
      if (c.up & bit) continue;
      sign = sign_from_parity(parity(c.up & low_mask(site)));
      c.up |= bit;
    } else {
      if (c.down & bit) continue;
      sign = sign_from_parity(parity(c.up) ^ parity(c.down & low_mask(site)));
      c.down |= bit;
    }
    const auto j = out.index_of(c);
    out[*j] += sign * a;
  }
  return out;
}

ManyBodyState apply_annihilation(const ManyBodyState& state, int site, Spin spin) {
  check_site_index(state, site);
  std::optional<Sector> out_sector = state.sector();
  if (out_sector) {
    int& occ = (spin == Spin::kUp) ? out_sector->n_up : out_sector->n_down;
    occ -= 1;
    if (occ < 0) {
      return ManyBodyState::zero_sector(state.sites(), *state.sector());
    }
  }
  ManyBodyState out = out_sector
                          ? ManyBodyState::zero_sector(state.sites(), *out_sector)
                          : ManyBodyState::zero_full(state.sites());
  const std::uint32_t bit = 1u << site;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex(0.0)) continue;
    FockConfig c = state.config_at(i);
    double sign;
    if (spin == Spin::kUp) {
      if (!(c.up & bit)) continue;
      c.up &= ~bit;
      sign = sign_from_parity(parity(c.up & low_mask(site)));
    } else {
      if (!(c.down & bit)) continue;
      c.down &= ~bit;
      sign = sign_from_parity(parity(c.up) ^ parity(c.down & low_mask(site)));
    }
    const auto j = out.index_of(c);
    out[*j] += sign * a;
  }
  return out;
}

Complex inner(const ManyBodyState& a, const ManyBodyState& b) {
  if (a.sites() != b.sites()) throw DomainError("inner: site counts differ");
  if (a.sector() && b.sector()) {
    if (*a.sector() != *b.sector()) return Complex(0.0);  // orthogonal sectors
    Complex sum(0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      sum += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return sum;
  }
  if (!a.sector() && !b.sector()) {
    Complex sum(0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      sum += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return sum;
  }
  // mixed representation: iterate the sector one
  const ManyBodyState& sec = a.sector() ? a : b;
  const ManyBodyState& full = a.sector() ? b : a;
  Complex sum(0.0);
  for (std::size_t i = 0; i < sec.dim(); ++i) {
    const auto j = full.index_of(sec.config_at(i));
    if (&sec == &a) {
      sum += std::conj(sec.amplitude(i)) * full.amplitude(*j);
    } else {
      sum += std::conj(full.amplitude(*j)) * sec.amplitude(i);
    }
  }
  return sum;
}

namespace {

std::uint32_t drop_bit(std::uint32_t mask, int site) {
  const std::uint32_t low = mask & low_mask(site);
  const std::uint32_t high = mask >> (site + 1);
  return low | (high << site);
}

std::uint32_t insert_bit(std::uint32_t mask, int site, unsigned value) {
  const std::uint32_t low = mask & low_mask(site);
  const std::uint32_t high = mask >> site;
  return low | (value << site) | (high << (site + 1));
}

}  // namespace

SiteRdm single_site_rdm(const ManyBodyState& state, int site) {
  check_site_index(state, site);
  check_normalized(state, "single_site_rdm");
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

  if (!state.sector()) {
    // enumerate environments directly: configurations of the other L-1 sites
    const int env_sites = state.sites() - 1;
    const std::size_t env_dim = std::size_t(1) << env_sites;
    for (std::size_t ue = 0; ue < env_dim; ++ue) {
      const std::uint32_t up_env =
          insert_bit(static_cast<std::uint32_t>(ue), site, 0);
      for (std::size_t de = 0; de < env_dim; ++de) {
        const std::uint32_t down_env =
            insert_bit(static_cast<std::uint32_t>(de), site, 0);
        Complex v[4];
        int nonzero = 0;
        for (int a = 0; a < 4; ++a) {
          const unsigned bu = (a == 1 || a == 2) ? 1u : 0u;  // double, up
          const unsigned bd = (a == 1 || a == 3) ? 1u : 0u;  // double, down
          const FockConfig c{up_env | (bu << site), down_env | (bd << site)};
          const Complex amp = state.amplitude(*state.index_of(c));
          v[a] = detach_sign(c, site) * amp;
          nonzero += (v[a] != Complex(0.0));
        }
        if (!nonzero) continue;
        for (int a = 0; a < 4; ++a) {
          for (int b = 0; b < 4; ++b) rho(a, b) += v[a] * std::conj(v[b]);
        }
      }
    }
  } else {
    // group sector configurations by environment
    std::unordered_map<std::uint32_t, std::array<Complex, 4>> env;
    env.reserve(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
      const Complex a = state.amplitude(i);
      if (a == Complex(0.0)) continue;
      const FockConfig c = state.config_at(i);
      const std::uint32_t key = (drop_bit(c.up, site) << 16) | drop_bit(c.down, site);
      auto [it, inserted] = env.try_emplace(key);
      if (inserted) it->second.fill(Complex(0.0));
      it->second[static_cast<int>(c.local_state(site))] += detach_sign(c, site) * a;
    }
    for (const auto& [key, v] : env) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) rho(a, b) += v[a] * std::conj(v[b]);
      }
    }
  }

  rho /= rho.trace().real();  // exact unit trace after the norm gate
  return SiteRdm(rho);
}

double measure_double_occupancy(const ManyBodyState& state) {
  check_normalized(state, "measure_double_occupancy");
  double total = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Complex a = state.amplitude(i);
    if (a == Complex(0.0)) continue;
    total += std::norm(a) * state.config_at(i).double_count();
  }
  return total / state.sites();
}

Complex measure_pairing(const ManyBodyState& state, int site) {
  check_site_index(state, site);
  const ManyBodyState dropped =
      apply_annihilation(apply_annihilation(state, site, Spin::kUp), site,
                         Spin::kDown);
  return inner(state, dropped);
}

}  // namespace sitemix
