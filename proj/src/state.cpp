#include "iqc/state.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace iqc {

ClockState::ClockState(ClockGrid grid, Vector coefficients)
    : grid_(grid), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != grid_.size())
    throw std::invalid_argument("state: coefficient count does not match grid");
}

Real ClockState::weighted_seminorm() const {
  Real s = 0;
  for (std::int64_t i = 0; i < coeffs_.size(); ++i)
    s += static_cast<Real>(std::llabs(grid_.index_at(i))) * std::abs(coeffs_(i));
  return s;
}

ClockState ClockState::normalized() const {
  Real n = norm();
  if (n == 0) throw std::invalid_argument("state: cannot normalize zero state");
  return ClockState(grid_, coeffs_ / n);
}

Scalar ClockState::inner(const ClockState& other) const {
  if (!(grid_ == other.grid_))
    throw std::invalid_argument("state: inner product across different grids");
  return coeffs_.dot(other.coeffs_);
}

ClockState make_state(const ClockGrid& grid,
                      const std::vector<std::pair<std::int64_t, Scalar>>& entries) {
  ClockState::Vector v = ClockState::Vector::Zero(grid.size());
  std::set<std::int64_t> seen;
  for (const auto& [n, d] : entries) {
    if (!seen.insert(n).second)
      throw std::invalid_argument("state: duplicate index " + std::to_string(n));
    v(grid.slot(n)) = d;  // slot() throws out_of_range for bad n
  }
  return ClockState(grid, std::move(v));
}

ClockState make_click(const ClockGrid& grid, std::int64_t n) {
  return make_state(grid, {{n, Scalar{1, 0}}});
}

MembershipDiagnostic diagnose_membership(const ClockState& state) {
  MembershipDiagnostic d;
  d.norm = state.norm();
  d.weighted_seminorm = state.weighted_seminorm();
  const auto& g = state.grid();
  for (std::int64_t i = 0; i < state.coefficients().size(); ++i)
    if (g.in_boundary_band(g.index_at(i)))
      d.boundary_mass += std::norm(state.coefficients()(i));
  return d;
}

}  // namespace iqc
