#include "sitemix/site_rdm.hpp"

#include <sstream>

namespace sitemix {

SiteRdm::SiteRdm(const Eigen::Matrix4cd& m) : m_(m) {
  const double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::kHermitian) {
    std::ostringstream os;
    os << "SiteRdm: not hermitian (max deviation " << herm_dev << ")";
    throw DomainError(os.str());
  }
  const double trace_dev = std::abs(m_.trace() - Complex(1.0));
  if (trace_dev > tol::kTrace) {
    std::ostringstream os;
    os << "SiteRdm: trace differs from 1 by " << trace_dev;
    throw DomainError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::kPsd) {
    std::ostringstream os;
    os << "SiteRdm: negative eigenvalue " << es.eigenvalues().minCoeff();
    throw DomainError(os.str());
  }
}

double SiteRdm::purity() const { return (m_ * m_).trace().real(); }

Eigen::Vector4d SiteRdm::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

}  // namespace sitemix
