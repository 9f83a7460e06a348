#include "sitemix/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sitemix {

namespace {

constexpr double kSlack = 1e-12;  // validation slack for chained arithmetic

void require(bool ok, const char* condition, double value) {
  if (!ok) {
    std::ostringstream os;
    os << "DensityParams: " << condition << " violated (value " << value << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

double epsilon(const SiteRdm& rdm) {
  return 4.0 / 3.0 * (1.0 - rdm.purity());
}

SiteRdm site_rdm(const DensityParams& p) {
  const double n = p.n();
  const double hole = 1.0 - n + p.d;
  require(p.n_up >= -kSlack, "n_up >= 0", p.n_up);
  require(p.n_down >= -kSlack, "n_down >= 0", p.n_down);
  require(n <= 1.0 + kSlack, "n <= 1", n);
  require(p.d >= -kSlack, "d >= 0 (double-occupancy eigenvalue)", p.d);
  require(hole >= -kSlack, "1 - n + d >= 0 (hole eigenvalue)", hole);
  require(p.n_up - p.d >= -kSlack, "n_up - d >= 0 (up eigenvalue)", p.n_up - p.d);
  require(p.n_down - p.d >= -kSlack, "n_down - d >= 0 (down eigenvalue)",
          p.n_down - p.d);
  require(p.zeta >= 0.0, "zeta >= 0", p.zeta);
  if (p.zeta > 0.0) {
    require(p.zeta * p.zeta <= p.d * hole + kSlack,
            "zeta^2 <= d (1 - n + d) (PSD of the hole/double block)",
            p.zeta * p.zeta - p.d * hole);
  }
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = hole;
  m(1, 1) = p.d;
  m(2, 2) = p.n_up - p.d;
  m(3, 3) = p.n_down - p.d;
  m(0, 1) = p.zeta;
  m(1, 0) = p.zeta;
  return SiteRdm(m);
}

NagaokaEpsilon nagaoka_epsilon(const NagaokaParams& p) {
  if (p.sites < 2) throw DomainError("NagaokaParams: N >= 2 required");
  if (p.down_spins < 0 || p.down_spins > p.sites - 1) {
    std::ostringstream os;
    os << "NagaokaParams: l = " << p.down_spins << " outside [0, N-1]";
    throw DomainError(os.str());
  }
  const double N = p.sites;
  const double l = p.down_spins;
  const double up = 1.0 - (l + 1.0) / N;
  const double dn = l / N;
  NagaokaEpsilon out;
  out.direct = 4.0 / 3.0 * (1.0 - 1.0 / (N * N) - up * up - dn * dn);
  out.paper_form = 8.0 * (l + 1.0) / (3.0 * N) * (1.0 - l / N);
  return out;
}

double nagaoka_max_paper_form(int sites) {
  double best = 0.0;
  for (int l = 0; l <= sites - 1; ++l) {
    best = std::max(best, nagaoka_epsilon({sites, l}).paper_form);
  }
  return best;
}

double gutzwiller_d(double g, double n) {
  if (g < 0.0 || g > 1.0) throw DomainError("gutzwiller_d: g outside [0, 1]");
  if (n <= 0.0 || n > 1.0) throw DomainError("gutzwiller_d: n outside (0, 1]");
  if (g == 0.0) return 0.0;
  const double u = 1.0 - g * g;
  if (std::abs(u) < 1e-6) return n * n / 4.0;  // removable singularity at g=1
  // -n u - log(1 - n u) = (n u)^2/2 + ... ; log1p keeps the cancellation mild
  const double bracket = -n * u - std::log1p(-n * u);
  return 0.5 * g * g / (u * u) * bracket;
}

double gutzwiller_epsilon(double g, double n) {
  const double d = gutzwiller_d(g, n);
  return epsilon(site_rdm({n / 2.0, n / 2.0, d, 0.0}));
}

double bcs_zeta(const BcsParams& p) {
  if (p.n <= 0.0 || p.n > 1.0) throw DomainError("BcsParams: n outside (0, 1]");
  if (p.delta0 < 0.0) throw DomainError("BcsParams: delta0 < 0");
  if (p.omega_d <= 0.0) throw DomainError("BcsParams: omega_d <= 0");
  if (p.e_f <= 0.0) throw DomainError("BcsParams: e_f <= 0");
  if (p.delta0 == 0.0) return 0.0;  // x asinh(c/x) -> 0
  return 3.0 * p.n * p.delta0 / (4.0 * p.e_f) * std::asinh(p.omega_d / p.delta0);
}

SiteRdm bcs_rdm(const BcsParams& p) {
  const double zeta = bcs_zeta(p);
  const double d = p.n * p.n / 4.0 + zeta * zeta;
  if (p.n / 2.0 - d <= 0.0) {
    std::ostringstream os;
    os << "gap too large for density: n/2 - d = " << p.n / 2.0 - d
       << " (zeta = " << zeta << ")";
    throw DomainError(os.str());
  }
  return site_rdm({p.n / 2.0, p.n / 2.0, d, zeta});
}

double bcs_epsilon(const BcsParams& p) { return epsilon(bcs_rdm(p)); }

double concurrence_x(double n, double d, double zeta) {
  return 2.0 * std::max(zeta - std::abs(n / 2.0 - d), 0.0);
}

double wootters_concurrence(const SiteRdm& rdm) {
  // permute (hole, double, up, down) to the two-qubit order
  // |00>, |01>, |10>, |11> of (up-qubit, down-qubit)
  Eigen::Matrix4cd P = Eigen::Matrix4cd::Zero();
  P(0, 0) = 1.0;  // |00> <- hole
  P(1, 3) = 1.0;  // |01> <- down
  P(2, 2) = 1.0;  // |10> <- up
  P(3, 1) = 1.0;  // |11> <- double
  const Eigen::Matrix4cd rho = P * rdm.matrix() * P.transpose();

  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();  // sigma_y x sigma_y
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;

  // factor rho = V V^dagger; the spin-flip eigenvalues lambda_i are the
  // singular values of tau = V^T (sigma_y x sigma_y) V, which avoids taking
  // square roots of near-zero eigenvalue products
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
  if (es.eigenvalues().minCoeff() < -tol::kPsd) {
    throw DomainError("wootters_concurrence: input not positive semidefinite");
  }
  Eigen::Matrix4cd V = es.eigenvectors();
  for (int i = 0; i < 4; ++i) {
    V.col(i) *= std::sqrt(std::max(es.eigenvalues()(i), 0.0));
  }
  const Eigen::Matrix4cd tau = V.transpose() * flip * V;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
  const Eigen::Vector4d& s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

}  // namespace sitemix
