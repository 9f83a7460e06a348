#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sitemix/site_rdm.hpp"
#include "sitemix/types.hpp"

namespace sitemix {

inline constexpr int kMaxSites = 12;

/// One basis configuration of L sites: paired occupation bit-sets, bit i of
/// `up` (`down`) set iff site i holds an up (down) electron. The local state
/// of a site follows the (hole, double, up, down) basis order.
struct FockConfig {
  std::uint32_t up = 0;
  std::uint32_t down = 0;

  bool operator==(const FockConfig&) const = default;

  LocalState local_state(int site) const {
    const unsigned u = (up >> site) & 1u;
    const unsigned d = (down >> site) & 1u;
    if (u && d) return LocalState::kDouble;
    if (u) return LocalState::kUp;
    if (d) return LocalState::kDown;
    return LocalState::kHole;
  }

  int double_count() const;
};

struct Sector {
  int n_up = 0;
  int n_down = 0;
  bool operator==(const Sector&) const = default;
};

/// All bit-masks over `sites` bits with fixed popcount, ascending. Ascending
/// mask order together with up-major indexing reproduces the canonical
/// configuration order (integer value of the concatenated bit-sets).
class SpinBasis {
 public:
  SpinBasis(int sites, int count);

  std::size_t size() const { return masks_.size(); }
  std::uint32_t mask(std::size_t i) const { return masks_[i]; }
  /// Rank of a mask within the basis; -1 if the popcount does not match.
  std::int32_t rank(std::uint32_t mask) const { return rank_[mask]; }

 private:
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> rank_;
};

/// Dense complex amplitude vector over the 4^L configuration space, or over
/// one (N_up, N_down) number sector. Configurations are indexed in the stable
/// canonical order; immutable value semantics apart from in-place amplitude
/// setup during construction.
class ManyBodyState {
 public:
  /// Zero state on the full 4^L space.
  static ManyBodyState zero_full(int sites);
  /// Zero state on a fixed number sector.
  static ManyBodyState zero_sector(int sites, Sector sector);
  /// |0>: the empty lattice (full-space representation).
  static ManyBodyState vacuum(int sites);

  int sites() const { return sites_; }
  const std::optional<Sector>& sector() const { return sector_; }
  std::size_t dim() const { return amp_.size(); }

  FockConfig config_at(std::size_t index) const;
  /// Index of a configuration, or nullopt if outside the stored sector.
  std::optional<std::size_t> index_of(const FockConfig& c) const;

  Complex amplitude(std::size_t index) const { return amp_[index]; }
  void set_amplitude(std::size_t index, Complex value) { amp_[index] = value; }
  Complex& operator[](std::size_t index) { return amp_[index]; }

  double norm() const;
  /// Scales to unit norm; throws DomainError on a zero vector.
  void normalize();

  /// this += coeff * other. Layouts (sites and sector) must match.
  void accumulate(const ManyBodyState& other, Complex coeff);
  void scale(Complex factor);

 private:
  ManyBodyState(int sites, std::optional<Sector> sector);

  int sites_;
  std::optional<Sector> sector_;
  std::vector<Complex> amp_;
  // sector storage only
  std::shared_ptr<const SpinBasis> up_basis_;
  std::shared_ptr<const SpinBasis> down_basis_;
};

/// c+_{site,spin} |state> with the canonical operator ordering (all up modes
/// for sites 0..L-1, then all down modes). Amplitudes on already-occupied
/// configurations map to zero. On a sector state whose target sector would
/// be impossible (spin species already full), the zero result keeps the
/// source sector tag.
ManyBodyState apply_creation(const ManyBodyState& state, int site, Spin spin);

/// c_{site,spin} |state>; adjoint of apply_creation. Same sector-edge
/// convention (empty spin species yields a zero state tagged with the
/// source sector).
ManyBodyState apply_annihilation(const ManyBodyState& state, int site, Spin spin);

/// <a|b>. States on different number sectors are orthogonal by construction.
Complex inner(const ManyBodyState& a, const ManyBodyState& b);

/// Partial trace onto one site, with the fermionic reordering signs of the
/// canonical ordering included. Requires |norm - 1| <= tol::kNormGate.
SiteRdm single_site_rdm(const ManyBodyState& state, int site);

/// (1/L) sum_i P(site i doubly occupied). Requires a normalized state.
double measure_double_occupancy(const ManyBodyState& state);

/// <c_{site,down} c_{site,up}>: the on-site pairing expectation.
Complex measure_pairing(const ManyBodyState& state, int site);

}  // namespace sitemix
