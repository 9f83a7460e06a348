#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sitemix {

using Complex = std::complex<double>;

/// Local basis states of one lattice site, in the fixed order used by every
/// 4x4 single-site density matrix in this library.
enum class LocalState : int { kHole = 0, kDouble = 1, kUp = 2, kDown = 3 };

enum class Spin : int { kUp = 0, kDown = 1 };

/// Parameter or state outside its validated domain.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failure when writing sweep/report output.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
inline constexpr double kNormGate = 1e-8;    // input gate on |norm - 1|
inline constexpr double kNormPost = 1e-12;   // postcondition after normalize()
inline constexpr double kHermitian = 1e-10;  // hermiticity / PSD acceptance
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-10;
}  // namespace tol

}  // namespace sitemix
