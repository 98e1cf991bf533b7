#include "iqc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iqc {

void legendre_nodes(int n, std::vector<Real>& nodes, std::vector<Real>& weights) {
  nodes.assign(n, 0);
  weights.assign(n, 0);
  // Roots of P_n by Newton iteration from the Chebyshev-like initial guess;
  // symmetric pairs share one computation.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    Real dp = 0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    Real w = 2.0 / ((1 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureRule::QuadratureRule(std::vector<Real> boundaries, int nodes_per_panel)
    : boundaries_(std::move(boundaries)), nodes_per_panel_(nodes_per_panel) {
  if (boundaries_.size() < 2)
    throw std::invalid_argument("quadrature: need at least two panel boundaries");
  if (!std::is_sorted(boundaries_.begin(), boundaries_.end()) ||
      std::adjacent_find(boundaries_.begin(), boundaries_.end()) != boundaries_.end())
    throw std::invalid_argument("quadrature: boundaries must be strictly increasing");
  if (nodes_per_panel_ < 2)
    throw std::invalid_argument("quadrature: nodes_per_panel must be >= 2");

  std::vector<Real> ref_nodes, ref_weights;
  legendre_nodes(nodes_per_panel_, ref_nodes, ref_weights);
  for (std::size_t p = 0; p + 1 < boundaries_.size(); ++p) {
    Real a = boundaries_[p], b = boundaries_[p + 1];
    Real mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < nodes_per_panel_; ++i) {
      nodes_.push_back(mid + half * ref_nodes[i]);
      weights_.push_back(half * ref_weights[i]);
    }
  }
}

QuadratureRule QuadratureRule::window(Real tau, int panels, int nodes_per_panel) {
  if (!(tau > 0)) throw std::invalid_argument("quadrature: tau must be positive");
  if (panels < 1) throw std::invalid_argument("quadrature: panels must be >= 1");
  // Split panels across the two half-windows so 0 is always a boundary.
  int per_half = (panels + 1) / 2;
  std::vector<Real> bs;
  for (int i = 0; i <= per_half; ++i)
    bs.push_back(-0.5 * tau + 0.5 * tau * i / per_half);
  for (int i = 1; i <= per_half; ++i)
    bs.push_back(0.5 * tau * i / per_half);
  return QuadratureRule(std::move(bs), nodes_per_panel);
}

QuadratureRule QuadratureRule::over(Real a, Real b, int panels, int nodes_per_panel) {
  if (!(a < b)) throw std::invalid_argument("quadrature: empty interval");
  if (panels < 1) throw std::invalid_argument("quadrature: panels must be >= 1");
  std::vector<Real> bs;
  for (int i = 0; i <= panels; ++i) bs.push_back(a + (b - a) * i / panels);
  return QuadratureRule(std::move(bs), nodes_per_panel);
}

Scalar QuadratureRule::sum(const std::function<Scalar(Real)>& f) const {
  Scalar acc{0, 0};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    Scalar v = f(nodes_[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericsError("quadrature: non-finite integrand sample at u = " +
                          std::to_string(nodes_[i]));
    acc += weights_[i] * v;
  }
  return acc;
}

IntegralResult QuadratureRule::integrate(const std::function<Scalar(Real)>& f) const {
  IntegralResult r;
  r.value = sum(f);
  r.error_estimate = std::abs(r.value - doubled().sum(f));
  return r;
}

Scalar central_diff(const std::function<Scalar(Real)>& f, Real at, Real h,
                    Real lo, Real hi) {
  if (!(h > 0)) throw std::invalid_argument("central_diff: h must be positive");
  if (at - 2 * h < lo || at + 2 * h > hi)
    throw std::domain_error("central_diff: stencil exceeds [lo, hi]");
  auto sym = [&](Real step) { return (f(at + step) - f(at - step)) / (2 * step); };
  Scalar d_h = sym(h), d_h2 = sym(h / 2);
  return (4.0 * d_h2 - d_h) / 3.0;
}

DerivativeSample central_diff_detailed(const std::function<Scalar(Real)>& f,
                                       Real at, Real h, Real lo, Real hi) {
  DerivativeSample s;
  s.value = central_diff(f, at, h, lo, hi);
  Scalar f0 = f(at);
  s.right_slope = (f(at + h) - f0) / h;
  s.left_slope = (f0 - f(at - h)) / h;
  Real scale = std::max({Real(1), std::abs(s.left_slope), std::abs(s.right_slope)});
  s.kinked = std::abs(s.right_slope - s.left_slope) > 1e-3 * scale;
  return s;
}

}  // namespace iqc
