#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace iqc {

using Real = double;
using Scalar = std::complex<Real>;

inline constexpr Scalar I{0.0, 1.0};

// Central comparison tolerances. Exact identities in this library hold to
// machine precision; these defaults sit far below model/truncation error so a
// tolerance failure signals a bug, not noise.
struct Tolerance {
  Real abs = 1e-10;
  Real rel = 1e-8;

  bool close(Real a, Real b) const {
    Real diff = std::abs(a - b);
    return diff <= abs || diff <= rel * std::max(std::abs(a), std::abs(b));
  }
  bool close(Scalar a, Scalar b) const {
    Real diff = std::abs(a - b);
    return diff <= abs || diff <= rel * std::max(std::abs(a), std::abs(b));
  }
};

// Bad run configuration (CLI exit 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical procedure failed to converge or produced non-finite values
// (CLI exit 3).
struct NumericsError : std::runtime_error {
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iqc
