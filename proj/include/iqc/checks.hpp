#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iqc/operators.hpp"

namespace iqc {

// One executable check. `tolerance` is +infinity for informational checks
// (approximate models where the theory makes no quantitative claim); those
// always pass and carry their measured value for the reader.
struct CheckReport {
  std::string check_name;
  std::string model;
  Scalar measured{0, 0};
  Scalar target{0, 0};
  Real abs_error = 0;
  Real tolerance = 0;
  bool passed = false;
  std::map<std::string, std::string> context;

  bool informational() const { return !std::isfinite(tolerance); }
};

struct CheckTolerances {
  Real identity_abs = 1e-8;     // exact-model identities, scaled by tau where dimensional
  Real constancy_abs = 1e-10;   // energy constancy along the curve
  Real commutator_abs = 0.05;   // desk-scale finite-size allowance
  Real reading_tau = 0.02;      // reading deviation in units of tau
  Real uncertainty_slack = 1e-6;
  Real uniformity_abs = 1e-10;
  Real consistency_abs = 1e-8;  // cyclic evolution vs its own generator
};

// Named probe states: the click at 0, the neighbour superposition
// (click0 + click1)/sqrt(2), and a seeded pseudo-random state supported on
// |n| <= max(1, span/8) (kept away from edges and seam).
struct ProbeState {
  std::string name;
  ClockState state;
};
std::vector<ProbeState> default_probes(const ClockModel& model, std::uint64_t seed);

// Pinned sample times: grid-aligned and generic, both signs.
std::vector<Real> default_t_samples(Real tau);

// max over sampled u of || d/du curve(u) + i H curve(u) ||, the distance of
// the model's windowed evolution from a Schroedinger curve of its own H.
Real consistency_defect(const ClockModel& model, const OperatorMatrix& h);

// Individual checks. Each documents its measured/target semantics in checks.cpp.
CheckReport check_energy_domain(const ClockModel& model, const OperatorMatrix& h,
                                const ProbeState& probe);
CheckReport check_energy_constancy(const ClockModel& model, const OperatorMatrix& h,
                                   const std::vector<Real>& t_samples,
                                   const CheckTolerances& tols);
CheckReport check_energy_bound(const ClockModel& model, const OperatorMatrix& h,
                               const std::vector<ProbeState>& probes,
                               const CheckTolerances& tols);
CheckReport check_pointer_step(const ClockModel& model, const OperatorMatrix& pc,
                               const ProbeState& probe, const CheckTolerances& tols);
CheckReport check_symmetry(const ClockModel& model, const OperatorMatrix& tc,
                           const std::vector<ProbeState>& probes,
                           const CheckTolerances& tols);
CheckReport check_commutator(const ClockModel& model, const OperatorMatrix& tc,
                             const OperatorMatrix& h, const ProbeState& probe,
                             const CheckTolerances& tols);
CheckReport check_reading(const ClockModel& model, const OperatorMatrix& tc,
                          const std::vector<Real>& t_samples,
                          const CheckTolerances& tols);
CheckReport check_shift_law(const ClockModel& model, const OperatorMatrix& tc,
                            const ProbeState& probe,
                            const std::vector<Real>& t_samples,
                            const CheckTolerances& tols);
CheckReport check_uncertainty(const ClockModel& model, const OperatorMatrix& tc,
                              const OperatorMatrix& h, const ProbeState& probe,
                              const CheckTolerances& tols);
CheckReport check_eigenvector_uniformity(const ClockModel& model,
                                         const OperatorMatrix& h,
                                         const CheckTolerances& tols);

// Runs everything with shared operator matrices; refuses line-model grids with
// fewer than four indices on either side of 0 (every check would be boundary
// dominated). Deterministic given (model, rule, seed).
std::vector<CheckReport> run_checks(const ClockModel& model,
                                    const QuadratureRule& rule,
                                    std::uint64_t seed,
                                    const CheckTolerances& tols = {});

// Clock-curve reading <curve(t)| TC |curve(t)>.
Real reading(const ClockModel& model, const OperatorMatrix& tc, Real t);

// Cyclic finite-size convergence data: how far the click-state commutator and
// half-window pointer step sit from their ideal values as dimension grows.
struct SweepRow {
  std::int64_t dimension = 0;
  Real commutator_abs_error = 0;
  Real period_step_abs_error = 0;
  Real herm_defect = 0;
};
std::vector<SweepRow> run_sweep(const std::vector<std::int64_t>& dimensions,
                                Real tau, int panels, int nodes_per_panel);

}  // namespace iqc
