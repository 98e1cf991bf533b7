#pragma once

#include <Eigen/Dense>
#include <string>

#include "iqc/model.hpp"
#include "iqc/state.hpp"

namespace iqc {

enum class OperatorLabel { H, PC, TC, Other };

std::string to_string(OperatorLabel label);

// Dense operator over the grid range, standard acting convention
// (A phi)^m = sum_n mat(m, n) d^n.
class OperatorMatrix {
 public:
  using Matrix = Eigen::MatrixXcd;

  OperatorMatrix(ClockGrid grid, Matrix mat, OperatorLabel label);

  const ClockGrid& grid() const { return grid_; }
  const Matrix& mat() const { return mat_; }
  OperatorLabel label() const { return label_; }

  Scalar entry(std::int64_t row_index, std::int64_t col_index) const {
    return mat_(grid_.slot(row_index), grid_.slot(col_index));
  }

  // max |A_mn - conj(A_nm)|
  Real hermitian_defect() const;

  ClockState apply(const ClockState& state) const;

 private:
  ClockGrid grid_;
  Matrix mat_;
  OperatorLabel label_;
};

// Generator matrix H_mn = i * cdot0(m - n). Hermitian up to the model's own
// defect, which is reported, not repaired (see symmetrized()).
OperatorMatrix build_hamiltonian(const ClockModel& model);

// Diagonal pointer operator diag(n * tau).
OperatorMatrix build_pc(const ClockGrid& grid);

// Window-averaged pointer: the bilinear table tau^{-1} sum_n integral
// c(k,n,u)* (n tau) c(m,n,u) du pairs bra k with ket m of the AVERAGE, which
// puts the table's first index in the matrix column: entry(m, k) = table(k, m).
// The quadrature window must be exactly [-tau/2, +tau/2]; assembly re-runs at
// doubled nodes and a max-entry change above quad_tol raises NumericsError.
OperatorMatrix build_tc(const ClockModel& model, const QuadratureRule& rule,
                        Real quad_tol = 1e-8);

OperatorMatrix symmetrized(const OperatorMatrix& op);

struct EvolveResult {
  ClockState state;
  Real mass_loss = 0;  // norm^2 lost to truncation (0 for cyclic wrap)
};

// Evolution by arbitrary t: decompose t = k*tau + u with |u| <= tau/2, shift
// indices by k and convolve with the window column. Line models truncate at
// the grid edge (mass loss recorded); cyclic models wrap indices modulo D.
EvolveResult evolve(const ClockModel& model, const ClockState& state, Real t);

// <phi|A|phi> / <phi|phi>; zero state -> std::invalid_argument.
Scalar expectation(const OperatorMatrix& op, const ClockState& state);

// Dwell-time form of the pointer average: tau^{-1} sum_n (n tau) integral
// |d^n(u)|^2 du over the window, evolving the state across it. Agrees with
// expectation(build_tc(...), state) within combined quadrature tolerance.
Real expectation_tc_dwell(const ClockModel& model, const ClockState& state,
                          const QuadratureRule& rule);

struct VarianceResult {
  Real value = 0;
  bool used_symmetrized = false;  // set when hermitian_defect forced the
                                  // symmetrized quadratic form
};

VarianceResult variance(const OperatorMatrix& op, const ClockState& state,
                        const Tolerance& tol = {});

// <phi| [A, B] |phi> / <phi|phi>
Scalar commutator_expectation(const OperatorMatrix& a, const OperatorMatrix& b,
                              const ClockState& state);

}  // namespace iqc
