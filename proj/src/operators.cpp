#include "iqc/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "iqc/identities.hpp"

namespace iqc {

std::string to_string(OperatorLabel label) {
  switch (label) {
    case OperatorLabel::H: return "H";
    case OperatorLabel::PC: return "PC";
    case OperatorLabel::TC: return "TC";
    default: return "other";
  }
}

OperatorMatrix::OperatorMatrix(ClockGrid grid, Matrix mat, OperatorLabel label)
    : grid_(grid), mat_(std::move(mat)), label_(label) {
  if (mat_.rows() != grid_.size() || mat_.cols() != grid_.size())
    throw std::invalid_argument("operator: matrix does not match grid size");
}

Real OperatorMatrix::hermitian_defect() const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

ClockState OperatorMatrix::apply(const ClockState& state) const {
  if (!(state.grid() == grid_))
    throw std::invalid_argument("operator: state lives on a different grid");
  return ClockState(grid_, mat_ * state.coefficients());
}

OperatorMatrix build_hamiltonian(const ClockModel& model) {
  const ClockGrid& g = model.grid();
  const std::int64_t L = g.size();
  const std::int64_t span = g.index_max() - g.index_min();

  // One derivative per offset, Toeplitz fill.
  std::vector<Scalar> diag(2 * span + 1);
  auto radius = model.support_radius();
  for (std::int64_t r = -span; r <= span; ++r) {
    if (radius && std::llabs(r) > *radius)
      diag[r + span] = Scalar{0, 0};
    else
      diag[r + span] = I * c_dot0(model, r);
  }

  OperatorMatrix::Matrix m(L, L);
  for (std::int64_t a = 0; a < L; ++a)
    for (std::int64_t b = 0; b < L; ++b)
      m(a, b) = diag[(a - b) + span];
  return OperatorMatrix(g, std::move(m), OperatorLabel::H);
}

OperatorMatrix build_pc(const ClockGrid& grid) {
  OperatorMatrix::Matrix m = OperatorMatrix::Matrix::Zero(grid.size(), grid.size());
  for (std::int64_t a = 0; a < grid.size(); ++a)
    m(a, a) = Scalar{grid.tick(grid.index_at(a)), 0};
  return OperatorMatrix(grid, std::move(m), OperatorLabel::PC);
}

namespace {

// Window-overlap Gram matrix J_rs = tau^{-1} integral c0(r,u)* c0(s,u) du for
// offsets r, s in [-span, span], evaluated as one dense product over the
// quadrature nodes.
Eigen::MatrixXcd overlap_gram(const ClockModel& model, const QuadratureRule& rule) {
  const ClockGrid& g = model.grid();
  const std::int64_t span = g.index_max() - g.index_min();
  const auto& us = rule.nodes();
  const auto& ws = rule.weights();

  Eigen::MatrixXcd A(2 * span + 1, us.size());
  auto radius = model.support_radius();
  for (std::int64_t r = -span; r <= span; ++r) {
    bool zero = radius && std::llabs(r) > *radius;
    for (std::size_t q = 0; q < us.size(); ++q)
      A(r + span, q) = zero ? Scalar{0, 0} : model.c0(r, us[q]);
  }
  Eigen::VectorXd w(ws.size());
  for (std::size_t q = 0; q < ws.size(); ++q) w(q) = ws[q];

  return (A.conjugate() * w.asDiagonal() * A.transpose()) / g.tau();
}

// The pairing table is indexed (k, m); the matrix that acts on coefficient
// vectors carries the image index in the row, which is the transpose. Getting
// this backwards conjugates every entry and flips the commutator's sign.
Eigen::MatrixXcd assemble_tc(const ClockGrid& g, const Eigen::MatrixXcd& J) {
  const std::int64_t L = g.size();
  const std::int64_t span = g.index_max() - g.index_min();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(L, L);
  for (std::int64_t a = 0; a < L; ++a) {
    std::int64_t k = g.index_at(a);
    for (std::int64_t b = 0; b < L; ++b) {
      std::int64_t m = g.index_at(b);
      Scalar acc{0, 0};
      for (std::int64_t n = g.index_min(); n <= g.index_max(); ++n)
        acc += static_cast<Real>(n) * J((k - n) + span, (m - n) + span);
      C(b, a) = g.tau() * acc;
    }
  }
  return C;
}

}  // namespace

OperatorMatrix build_tc(const ClockModel& model, const QuadratureRule& rule,
                        Real quad_tol) {
  const ClockGrid& g = model.grid();
  Real half = 0.5 * g.tau();
  Real slack = kWindowSlack * g.tau();
  if (std::abs(rule.lo() + half) > slack || std::abs(rule.hi() - half) > slack)
    throw std::invalid_argument("build_tc: quadrature window must be [-tau/2, +tau/2]");

  Eigen::MatrixXcd C = assemble_tc(g, overlap_gram(model, rule));
  Eigen::MatrixXcd C2 = assemble_tc(g, overlap_gram(model, rule.doubled()));

  Real defect = (C - C2).cwiseAbs().maxCoeff();
  Real scale = std::max(Real(1), C2.cwiseAbs().maxCoeff());
  if (defect > quad_tol * scale)
    throw NumericsError("build_tc: quadrature did not converge (change " +
                        std::to_string(defect) + " at doubled nodes)");
  return OperatorMatrix(g, std::move(C2), OperatorLabel::TC);
}

OperatorMatrix symmetrized(const OperatorMatrix& op) {
  OperatorMatrix::Matrix m = 0.5 * (op.mat() + op.mat().adjoint());
  return OperatorMatrix(op.grid(), std::move(m), op.label());
}

EvolveResult evolve(const ClockModel& model, const ClockState& state, Real t) {
  const ClockGrid& g = model.grid();
  Real tau = g.tau();
  std::int64_t k = std::llround(t / tau);
  Real u = t - static_cast<Real>(k) * tau;

  const auto& d = state.coefficients();

  if (model.cyclic()) {
    // Full-cycle convolution; c0 is periodic in the offset, so residues
    // interfere coherently. Cycle positions outside a narrower grid are lost.
    const std::int64_t D = model.cycle_length();
    const std::int64_t cyc_hi = D / 2, cyc_lo = cyc_hi - D + 1;
    ClockState::Vector out = ClockState::Vector::Zero(g.size());
    Real lost = 0;
    for (std::int64_t m = cyc_lo; m <= cyc_hi; ++m) {
      Scalar acc{0, 0};
      for (std::int64_t i = 0; i < d.size(); ++i) {
        std::int64_t n = g.index_at(i);
        acc += model.c0(m - n - k, u) * d(i);
      }
      if (g.contains(m))
        out(g.slot(m)) = acc;
      else
        lost += std::norm(acc);
    }
    return {ClockState(g, std::move(out)), lost};
  }

  // Line model: convolve into an extended range, then truncate.
  const std::int64_t span = g.index_max() - g.index_min();
  const std::int64_t R = model.support_radius().value_or(span);
  const std::int64_t ext_lo = g.index_min() + k - R, ext_hi = g.index_max() + k + R;
  ClockState::Vector ext = ClockState::Vector::Zero(ext_hi - ext_lo + 1);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    if (d(i) == Scalar{0, 0}) continue;
    std::int64_t n = g.index_at(i);
    for (std::int64_t r = -R; r <= R; ++r)
      ext(n + k + r - ext_lo) += model.c0(r, u) * d(i);
  }
  ClockState::Vector out = ClockState::Vector::Zero(g.size());
  Real lost = 0;
  for (std::int64_t e = ext_lo; e <= ext_hi; ++e) {
    Scalar a = ext(e - ext_lo);
    if (a == Scalar{0, 0}) continue;
    if (g.contains(e))
      out(g.slot(e)) = a;
    else
      lost += std::norm(a);
  }
  return {ClockState(g, std::move(out)), lost};
}

Scalar expectation(const OperatorMatrix& op, const ClockState& state) {
  Real n2 = state.coefficients().squaredNorm();
  if (n2 == 0) throw std::invalid_argument("expectation: zero state");
  const auto& d = state.coefficients();
  return d.dot(op.mat() * d) / n2;
}

Real expectation_tc_dwell(const ClockModel& model, const ClockState& state,
                          const QuadratureRule& rule) {
  Real n2 = state.coefficients().squaredNorm();
  if (n2 == 0) throw std::invalid_argument("expectation: zero state");
  const ClockGrid& g = model.grid();
  const auto& us = rule.nodes();
  const auto& ws = rule.weights();
  Real acc = 0;
  for (std::size_t q = 0; q < us.size(); ++q) {
    ClockState ev = evolve(model, state, us[q]).state;
    Real dwell = 0;
    for (std::int64_t i = 0; i < ev.coefficients().size(); ++i)
      dwell += g.tick(g.index_at(i)) * std::norm(ev.coefficients()(i));
    acc += ws[q] * dwell;
  }
  return acc / (g.tau() * n2);
}

VarianceResult variance(const OperatorMatrix& op, const ClockState& state,
                        const Tolerance& tol) {
  Real n2 = state.coefficients().squaredNorm();
  if (n2 == 0) throw std::invalid_argument("variance: zero state");

  VarianceResult r;
  const OperatorMatrix* use = &op;
  OperatorMatrix sym = op;  // copy only used when defect is above tolerance
  if (op.hermitian_defect() > tol.abs) {
    sym = symmetrized(op);
    use = &sym;
    r.used_symmetrized = true;
  }
  const auto& d = state.coefficients();
  ClockState::Vector ad = use->mat() * d;
  Real mean = d.dot(ad).real() / n2;
  Real second = ad.squaredNorm() / n2;
  Real v = second - mean * mean;
  Real scale = std::max(Real(1), second);
  if (v < -1e-12 * scale)
    throw NumericsError("variance: negative beyond slack (" + std::to_string(v) + ")");
  r.value = std::max(v, Real(0));
  return r;
}

Scalar commutator_expectation(const OperatorMatrix& a, const OperatorMatrix& b,
                              const ClockState& state) {
  Real n2 = state.coefficients().squaredNorm();
  if (n2 == 0) throw std::invalid_argument("commutator: zero state");
  const auto& d = state.coefficients();
  ClockState::Vector ab = a.mat() * (b.mat() * d);
  ClockState::Vector ba = b.mat() * (a.mat() * d);
  return d.dot(ab - ba) / n2;
}

}  // namespace iqc
