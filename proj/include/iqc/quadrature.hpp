#pragma once

#include <functional>
#include <vector>

#include "iqc/types.hpp"

namespace iqc {

struct IntegralResult {
  Scalar value{0, 0};
  Real error_estimate = 0;  // |value - value at doubled node count|
};

// Derivative at a point with kink diagnostics. `value` follows the symmetric
// average convention, so it is well defined even across a kink.
struct DerivativeSample {
  Scalar value{0, 0};
  Scalar left_slope{0, 0};
  Scalar right_slope{0, 0};
  bool kinked = false;
};

// Composite Gauss-Legendre rule over sorted panel boundaries. Deterministic:
// nodes come from Newton iteration on the Legendre polynomial, the same inputs
// always produce the same nodes, weights and summation order.
class QuadratureRule {
 public:
  // Panels between the given boundaries (at least two boundaries, strictly
  // increasing), nodes_per_panel >= 2.
  QuadratureRule(std::vector<Real> boundaries, int nodes_per_panel);

  // Rule over the clock window [-tau/2, +tau/2] with `panels` uniform panels,
  // arranged so that 0 is always a panel boundary (integrands kink there).
  static QuadratureRule window(Real tau, int panels = 4, int nodes_per_panel = 16);

  // Plain uniform-panel rule over [a, b].
  static QuadratureRule over(Real a, Real b, int panels = 1, int nodes_per_panel = 16);

  Real lo() const { return boundaries_.front(); }
  Real hi() const { return boundaries_.back(); }
  int nodes_per_panel() const { return nodes_per_panel_; }
  const std::vector<Real>& boundaries() const { return boundaries_; }
  const std::vector<Real>& nodes() const { return nodes_; }
  const std::vector<Real>& weights() const { return weights_; }

  QuadratureRule doubled() const { return QuadratureRule(boundaries_, 2 * nodes_per_panel_); }

  // Throws NumericsError on non-finite samples.
  IntegralResult integrate(const std::function<Scalar(Real)>& f) const;

 private:
  std::vector<Real> boundaries_;
  int nodes_per_panel_;
  std::vector<Real> nodes_, weights_;

  Scalar sum(const std::function<Scalar(Real)>& f) const;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void legendre_nodes(int n, std::vector<Real>& nodes, std::vector<Real>& weights);

// Symmetric difference with one Richardson level: (4 D_{h/2} - D_h) / 3.
// Evaluation points must stay inside [lo, hi]; violation -> std::domain_error.
Scalar central_diff(const std::function<Scalar(Real)>& f, Real at, Real h,
                    Real lo, Real hi);

// Same value plus one-sided slopes and a kink flag (slopes disagreeing beyond
// a 1e-3 relative threshold).
DerivativeSample central_diff_detailed(const std::function<Scalar(Real)>& f,
                                       Real at, Real h, Real lo, Real hi);

}  // namespace iqc
