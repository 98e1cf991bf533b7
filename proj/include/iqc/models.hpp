#pragma once

#include <functional>
#include <memory>

#include "iqc/model.hpp"

namespace iqc {

// Curve profile g on [-tau, +tau] for the two-component model.
// Required: g(0) = 1, g(+-tau) = 0, |g(-t)| = |g(t)|, and the partition
// |g(u)|^2 + |g(u-tau)|^2 = 1 on [0, tau].
struct ProfileFunction {
  std::function<Scalar(Real)> g;
  bool differentiable_at_zero = true;
};

// The exact partition-of-unity profile cos(pi*u / (2*tau)).
ProfileFunction cosine_profile(Real tau);

// Two-component clock: each window state is a combination of the two
// neighbouring clicks weighted by the profile. Support radius 1. Violates
// profile invariants beyond 1e-8 at 65 sample points -> std::invalid_argument.
std::shared_ptr<ClockModel> make_two_component(const ClockGrid& grid,
                                               const ProfileFunction& profile);

// Piecewise-linear interpolation clock: intentionally non-unit-norm away from
// the clicks; kinked at u = 0. Support radius 1.
std::shared_ptr<ClockModel> make_piecewise_linear(const ClockGrid& grid);

// Finite cyclic clock of dimension D with centred integer frequencies
// omega_k = 2*pi*k / (D*tau), k in [-floor((D-1)/2), floor(D/2)]. Exactly
// unitary; evolution by tau shifts clicks by one step around the cycle.
struct CyclicSpec {
  std::int64_t dimension = 8;  // >= 8
  Real tau = 1.0;
};

// Grid must fit inside one cycle (size <= D); wider -> ConfigError.
std::shared_ptr<ClockModel> make_cyclic(const CyclicSpec& spec,
                                        const ClockGrid& grid);

// The centred window [floor(D/2) - D + 1, floor(D/2)] that maps the whole
// cycle onto grid indices, seam between index_max and index_min.
ClockGrid cyclic_full_grid(const CyclicSpec& spec);

}  // namespace iqc
