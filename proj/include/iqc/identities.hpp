#pragma once

#include <vector>

#include "iqc/model.hpp"

namespace iqc {

// Defect maxima from sampling the model identities over the window.
// The "unitarity" defects are the diagonal row/column norm sums
// max | sum_n |c(n,k,u)|^2 - 1 |; the cross-term defect is the off-diagonal
// inner product max | sum_n c(n,k,u)* c(n,m,u) | for k != m. Exactly unitary
// models keep both at machine precision; approximate models violate them by
// design and the defects quantify the approximation, they are never hidden.
struct IdentityReport {
  int u_samples = 0;
  Real max_orthonormality_defect = 0;  // c(m,n,0) vs delta
  Real max_unitarity_defect = 0;       // row/column norm sums vs 1
  Real max_cross_term_defect = 0;      // off-diagonal inner products vs 0
  Real max_symmetry_defect = 0;        // c(m,n,-u) vs conj(c(n,m,u))
  Real unitarity_defect_at_half_window = 0;
  Real tail_weighted_sum = 0;   // sum |n||c0(n,u)| over the outer 10% band
  Real derivative_tail = 0;     // sum |n||cdot0(n)| over the outer 10% band
  Real shift_defect = 0;        // c(m+r,n+r,u) vs c(m,n,u), exact by storage
  bool kinked = false;
  bool passed = false;  // exact checks within tolerance; for exactly unitary
                        // models the unitarity defects are exact checks too
};

// Samples a uniform closed u-grid over [-tau/2, +tau/2] (endpoints included).
// samples >= 3.
IdentityReport validate_identities(const ClockModel& model, int samples = 33,
                                   const Tolerance& tol = {});

// Max over u_samples of the weighted overlap sum restricted to the outer 10%
// of offsets on each side; 0 for compact-support models inside the grid.
Real tail_estimate(const ClockModel& model, const std::vector<Real>& u_samples);

}  // namespace iqc
