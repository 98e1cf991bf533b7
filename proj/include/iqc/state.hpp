#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "iqc/grid.hpp"
#include "iqc/types.hpp"

namespace iqc {

struct MembershipDiagnostic {
  Real norm = 0;               // sqrt(sum |d^n|^2)
  Real weighted_seminorm = 0;  // sum |n| |d^n|
  Real boundary_mass = 0;      // sum |d^n|^2 over the outer 10% band each side
};

// Coefficient vector d^n over a ClockGrid. Immutable after construction.
class ClockState {
 public:
  using Vector = Eigen::VectorXcd;

  ClockState(ClockGrid grid, Vector coefficients);

  const ClockGrid& grid() const { return grid_; }
  const Vector& coefficients() const { return coeffs_; }

  Scalar coefficient(std::int64_t n) const { return coeffs_(grid_.slot(n)); }
  Real norm() const { return coeffs_.norm(); }
  Real weighted_seminorm() const;

  ClockState normalized() const;

  // <this|other>, conjugate-linear in the left slot.
  Scalar inner(const ClockState& other) const;

 private:
  ClockGrid grid_;
  Vector coeffs_;
};

// Builds a state from sparse (index, coefficient) entries; zeros elsewhere.
// Out-of-range index -> std::out_of_range; duplicate index -> std::invalid_argument.
ClockState make_state(const ClockGrid& grid,
                      const std::vector<std::pair<std::int64_t, Scalar>>& entries);

// Basis click state at index n.
ClockState make_click(const ClockGrid& grid, std::int64_t n);

MembershipDiagnostic diagnose_membership(const ClockState& state);

}  // namespace iqc
