#pragma once

#include <Eigen/Dense>

#include "sitemix/types.hpp"

namespace sitemix {

/// 4x4 single-site reduced density matrix in the basis
/// (hole, double, up, down).
///
/// Construction validates hermiticity, unit trace and positive
/// semidefiniteness (up to the tolerances in sitemix::tol) and throws
/// DomainError on violation.
class SiteRdm {
 public:
  explicit SiteRdm(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

  Complex operator()(LocalState a, LocalState b) const {
    return m_(static_cast<int>(a), static_cast<int>(b));
  }

  /// Tr(rho^2); real for a hermitian matrix.
  double purity() const;

  /// Eigenvalues in descending order.
  Eigen::Vector4d eigenvalues() const;

 private:
  Eigen::Matrix4cd m_;
};

}  // namespace sitemix
