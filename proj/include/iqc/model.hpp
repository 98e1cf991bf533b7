#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "iqc/grid.hpp"
#include "iqc/quadrature.hpp"
#include "iqc/types.hpp"

namespace iqc {

// A clock model supplies the single stored overlap column
//   c0(n, u) = <click n | curve point at time u>,  |u| <= tau/2;
// every other index pair follows from translation invariance,
//   c(m, n, u) = c0(m - n, u).
// Evaluators must be pure; models are immutable after construction.
class ClockModel {
 public:
  virtual ~ClockModel() = default;

  virtual const ClockGrid& grid() const = 0;
  virtual std::string name() const = 0;

  // Raw evaluator; the window precondition is enforced by the free function c().
  virtual Scalar c0(std::int64_t n, Real u) const = 0;

  // Analytic d/du c0(n, u) at u = 0, when the model has one.
  virtual std::optional<Scalar> cdot0_analytic(std::int64_t n) const {
    (void)n;
    return std::nullopt;
  }

  // Offsets with |n| > support_radius have c0 == 0 identically.
  // nullopt means full support (truncated only by the grid).
  virtual std::optional<std::int64_t> support_radius() const { return std::nullopt; }

  // Declared kink of the overlap column at u = 0 (branch switch).
  virtual bool kinked_at_zero() const { return false; }

  // Exactly unitary models satisfy the orthonormality-propagation property to
  // machine precision; approximate models violate it by design.
  virtual bool exactly_unitary() const { return false; }

  // Cyclic models evolve by wrapping indices modulo the cycle instead of
  // truncating at the grid edge.
  virtual bool cyclic() const { return false; }
  virtual std::int64_t cycle_length() const { return 0; }
};

// Slack applied to the window bound so quadrature endpoints stay legal.
inline constexpr Real kWindowSlack = 1e-12;

// c(m, n, u) = c0(m - n, u) with range and window checks.
// u outside [-tau/2, +tau/2] (plus slack) -> std::domain_error;
// m or n outside the grid -> std::out_of_range.
Scalar c(const ClockModel& model, std::int64_t m, std::int64_t n, Real u);

// Derivative of the overlap column at u = 0: analytic when the model provides
// it, otherwise a symmetric difference with one Richardson level
// (h = tau * 1e-5). Kinked columns get the symmetric-average value.
Scalar c_dot0(const ClockModel& model, std::int64_t n);

// Same, with one-sided slopes and the kink flag (declared or detected).
DerivativeSample c_dot0_detailed(const ClockModel& model, std::int64_t n);

}  // namespace iqc
