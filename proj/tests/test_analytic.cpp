#include <doctest.h>

#include <cmath>

#include "sitemix/analytic.hpp"

using namespace sitemix;

namespace {

SiteRdm diagonal_rdm(double a, double b, double c, double d) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return SiteRdm(m);
}

std::uint64_t mix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t& s, double lo, double hi) {
  return lo + (hi - lo) * ((mix(s) >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("epsilon of the class-extremal spectra") {
  CHECK(epsilon(diagonal_rdm(0, 0, 0.5, 0.5)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(epsilon(diagonal_rdm(1.0 / 3, 0, 1.0 / 3, 1.0 / 3)) ==
        doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  CHECK(epsilon(diagonal_rdm(0.25, 0.25, 0.25, 0.25)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(epsilon(diagonal_rdm(1, 0, 0, 0)) == 0.0);
}

TEST_CASE("site_rdm reproduces the parameterized matrices") {
  const SiteRdm metallic = site_rdm({0.5, 0.5, 0.25, 0.0});
  for (int a = 0; a < 4; ++a) {
    CHECK(metallic.matrix()(a, a).real() == doctest::Approx(0.25).epsilon(1e-15));
  }
  const SiteRdm no_double = site_rdm({1.0 / 3, 1.0 / 3, 0.0, 0.0});
  CHECK(no_double(LocalState::kHole, LocalState::kHole).real() ==
        doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(std::abs(no_double(LocalState::kDouble, LocalState::kDouble)) == 0.0);

  // paired state: d = n^2/4 + zeta^2 at half filling
  const SiteRdm paired = site_rdm({0.5, 0.5, 0.25 + 0.01, 0.1});
  CHECK(paired(LocalState::kHole, LocalState::kHole).real() == doctest::Approx(0.26).epsilon(1e-15));
  CHECK(paired(LocalState::kHole, LocalState::kDouble).real() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(paired(LocalState::kDouble, LocalState::kHole).real() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(paired(LocalState::kUp, LocalState::kUp).real() == doctest::Approx(0.24).epsilon(1e-15));
}

TEST_CASE("site_rdm names the violated condition") {
  CHECK_THROWS_WITH_AS(site_rdm({0.5, 0.5, 0.6, 0.0}),
                       doctest::Contains("up eigenvalue"), DomainError);
  CHECK_THROWS_WITH_AS(site_rdm({0.2, 0.2, 0.1, 0.3}),
                       doctest::Contains("PSD"), DomainError);
  CHECK_THROWS_AS(site_rdm({0.7, 0.7, 0.0, 0.0}), DomainError);  // n > 1
}

TEST_CASE("nagaoka epsilon: direct evaluation vs printed closed form") {
  const NagaokaEpsilon two_sites = nagaoka_epsilon({2, 0});
  CHECK(two_sites.direct == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // printed form at l = (N-1)/2 equals (2/3)(1 + 1/N)^2 for odd N
  for (int sites : {3, 5, 9, 33}) {
    const double expect = 2.0 / 3.0 * std::pow(1.0 + 1.0 / sites, 2);
    CHECK(nagaoka_epsilon({sites, (sites - 1) / 2}).paper_form ==
          doctest::Approx(expect).epsilon(1e-14));
    CHECK(nagaoka_max_paper_form(sites) == doctest::Approx(expect).epsilon(1e-14));
  }

  // the two readings differ by exactly 8/(3N^2)
  for (int sites = 2; sites <= 64; ++sites) {
    for (int l = 0; l < sites; ++l) {
      const NagaokaEpsilon eps = nagaoka_epsilon({sites, l});
      CHECK(eps.paper_form - eps.direct ==
            doctest::Approx(8.0 / (3.0 * sites * sites)).epsilon(1e-12));
    }
  }

  // large-N half-polarized limit reduces to the spin-only maximum
  const NagaokaEpsilon big = nagaoka_epsilon({100000, 50000});
  CHECK(big.direct == doctest::Approx(2.0 / 3.0).epsilon(1e-4));

  CHECK_THROWS_AS(nagaoka_epsilon({4, 4}), DomainError);
  CHECK_THROWS_AS(nagaoka_epsilon({4, -1}), DomainError);
}

TEST_CASE("gutzwiller double occupancy closed form") {
  CHECK(gutzwiller_d(1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(gutzwiller_d(1.0, 0.5) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(gutzwiller_d(0.0, 0.7) == 0.0);
  CHECK(gutzwiller_d(0.5, 1.0) == doctest::Approx(0.14139874691553125).epsilon(1e-14));
  CHECK(gutzwiller_d(0.25, 1.0) == doctest::Approx(0.06524759901297).epsilon(1e-12));
  CHECK(gutzwiller_d(0.75, 1.0) == doctest::Approx(0.20257588638890722).epsilon(1e-12));
  CHECK_THROWS_AS(gutzwiller_d(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(gutzwiller_d(0.5, 0.0), DomainError);

  // monotone nondecreasing in g, approaching n^2/4 smoothly at g -> 1
  for (double n : {0.25, 0.5, 0.75, 1.0}) {
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double d = gutzwiller_d(i / 1000.0, n);
      CHECK(d >= prev - 1e-15);
      prev = d;
    }
    double prev_dev = 1.0;
    for (int k = 1; k <= 7; ++k) {
      const double dev = std::abs(gutzwiller_d(1.0 - std::pow(10.0, -k), n) - n * n / 4.0);
      CHECK(dev <= prev_dev + 1e-15);
      prev_dev = dev;
    }
  }
}

TEST_CASE("gutzwiller entanglement endpoints and small-n inversion") {
  CHECK(gutzwiller_epsilon(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gutzwiller_epsilon(0.0, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(gutzwiller_epsilon(0.0, 0.25) == doctest::Approx(13.0 / 24.0).epsilon(1e-14));
  CHECK(gutzwiller_epsilon(1.0, 0.25) == doctest::Approx(0.51953125).epsilon(1e-14));
  // the strongly-projected end overtakes the metallic end at low density
  CHECK(gutzwiller_epsilon(0.0, 0.25) > gutzwiller_epsilon(1.0, 0.25));
  CHECK(gutzwiller_epsilon(0.0, 1.0) < gutzwiller_epsilon(1.0, 1.0));
}

TEST_CASE("bcs pairing amplitude closed form") {
  CHECK(bcs_zeta({1.0, 0.0, 0.5, 1.0}) == 0.0);
  CHECK(bcs_zeta({1.0, 0.5, 0.5, 1.0}) ==
        doctest::Approx(0.33051509513232863).epsilon(1e-14));
  // just past the concurrence onset on the (n=1, w=0.5) parameter set
  CHECK(bcs_zeta({1.0, 0.28 * 0.5, 0.5, 1.0}) ==
        doctest::Approx(0.2084418516908121).epsilon(1e-13));
  CHECK(bcs_zeta({1.0, 0.1, 0.1, 1.0}) ==
        doctest::Approx(0.066103019026465727).epsilon(1e-14));
  CHECK_THROWS_AS(bcs_zeta({1.5, 0.1, 0.1, 1.0}), DomainError);
  CHECK_THROWS_AS(bcs_zeta({1.0, -0.1, 0.1, 1.0}), DomainError);
}

TEST_CASE("bcs single-site rdm and its validity boundary") {
  const SiteRdm normal = bcs_rdm({1.0, 0.0, 0.1, 1.0});
  CHECK(normal(LocalState::kDouble, LocalState::kDouble).real() ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(normal(LocalState::kHole, LocalState::kDouble)) == 0.0);

  const SiteRdm gapped = bcs_rdm({1.0, 0.1, 0.1, 1.0});
  CHECK(gapped(LocalState::kHole, LocalState::kDouble).real() ==
        doctest::Approx(0.066103019026465727).epsilon(1e-13));
  CHECK(gapped(LocalState::kDouble, LocalState::kDouble).real() ==
        doctest::Approx(0.25436960912441329).epsilon(1e-13));
  CHECK(gapped(LocalState::kUp, LocalState::kUp).real() ==
        doctest::Approx(0.24563039087558671).epsilon(1e-13));

  // zeta = 0.5 at n = 1 sits exactly on the n/2 - d = 0 boundary; with
  // omega_d = 1 the pairing amplitude saturates at 3/4, so the boundary is
  // reachable by raising the gap
  const double delta_boundary = [] {
    double lo = 0.1, hi = 5.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (bcs_zeta({1.0, mid, 1.0, 1.0}) < 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  CHECK(bcs_zeta({1.0, delta_boundary, 1.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_WITH_AS(bcs_rdm({1.0, delta_boundary * 1.0001, 1.0, 1.0}),
                       doctest::Contains("gap too large for density"), DomainError);
}

TEST_CASE("bcs entanglement values") {
  CHECK(bcs_epsilon({1.0, 0.0, 0.1, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bcs_epsilon({0.5, 0.0, 0.1, 1.0}) == doctest::Approx(0.8125).epsilon(1e-15));
  CHECK(bcs_epsilon({1.0, 0.1, 0.1, 1.0}) ==
        doctest::Approx(0.9882458770874304).epsilon(1e-12));
}

TEST_CASE("closed-form concurrence") {
  CHECK(concurrence_x(1.0, 0.25, 0.0) == 0.0);
  // exact onset: zeta + zeta^2 = 1/4
  const double zeta_star = (std::sqrt(2.0) - 1.0) / 2.0;
  CHECK(concurrence_x(1.0, 0.25 + zeta_star * zeta_star, zeta_star) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(concurrence_x(1.0, 0.34, 0.3) == doctest::Approx(0.28).epsilon(1e-15));
}

TEST_CASE("wootters concurrence: pure and separable extremes") {
  // maximally entangled (hole + double)/sqrt(2): an on-site Cooper pair
  Eigen::Matrix4cd bell = Eigen::Matrix4cd::Zero();
  bell(0, 0) = bell(1, 1) = bell(0, 1) = bell(1, 0) = 0.5;
  CHECK(wootters_concurrence(SiteRdm(bell)) == doctest::Approx(1.0).epsilon(1e-13));

  CHECK(wootters_concurrence(site_rdm({0.5, 0.5, 0.25, 0.0})) ==
        doctest::Approx(0.0).epsilon(1e-13));
  CHECK(wootters_concurrence(site_rdm({0.3, 0.3, 0.1, 0.0})) ==
        doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("wootters concurrence equals the X-state closed form") {
  CHECK(wootters_concurrence(site_rdm({0.5, 0.5, 0.34, 0.3})) ==
        doctest::Approx(concurrence_x(1.0, 0.34, 0.3)).epsilon(1e-13));

  std::uint64_t seed = 2024;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double n = uniform(seed, 0.02, 1.0);
    const double d = uniform(seed, 0.02, 0.98) * (n / 2.0);
    const double zeta = uniform(seed, 0.0, 0.95) * std::sqrt(d * (1.0 - n + d));
    const double general = wootters_concurrence(site_rdm({n / 2, n / 2, d, zeta}));
    const double closed = concurrence_x(n, d, zeta);
    worst = std::max(worst, std::abs(general - closed));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("wootters concurrence on exact psd boundaries") {
  // zeta^2 = d (1 - n + d): one block eigenvalue exactly zero
  const double n = 0.8, d = 0.3;
  const double zeta = std::sqrt(d * (1.0 - n + d));
  CHECK(wootters_concurrence(site_rdm({n / 2, n / 2, d, zeta})) ==
        doctest::Approx(concurrence_x(n, d, zeta)).epsilon(1e-12));
  // d = n/2: both spin-only weights exactly zero
  CHECK(wootters_concurrence(site_rdm({0.3, 0.3, 0.3, 0.2})) ==
        doctest::Approx(concurrence_x(0.6, 0.3, 0.2)).epsilon(1e-12));
}

TEST_CASE("epsilon stays within [0, 1] and the class ceilings hold") {
  std::uint64_t seed = 5150;
  for (int trial = 0; trial < 2000; ++trial) {
    const double n = uniform(seed, 0.02, 1.0);
    const double d = uniform(seed, 0.0, 1.0) * (n / 2.0);
    const double split = uniform(seed, 0.0, 1.0);
    const double n_up = d + (n - 2.0 * d) * split;
    const double eps = epsilon(site_rdm({n_up, n - n_up, d, 0.0}));
    CHECK(eps >= -1e-12);
    CHECK(eps <= 1.0 + 1e-12);
  }
  for (int trial = 0; trial < 2000; ++trial) {
    const double up = uniform(seed, 0.0, 1.0);
    CHECK(epsilon(site_rdm({up, 1.0 - up, 0.0, 0.0})) <= 2.0 / 3.0 + 1e-12);
    const double n = uniform(seed, 0.0, 1.0);
    const double split = uniform(seed, 0.0, 1.0);
    CHECK(epsilon(site_rdm({n * split, n * (1 - split), 0.0, 0.0})) <=
          8.0 / 9.0 + 1e-12);
  }
}
