#include "iqc/models.hpp"

#include <cmath>
#include <string>

namespace iqc {

ProfileFunction cosine_profile(Real tau) {
  ProfileFunction p;
  p.g = [tau](Real t) { return Scalar{std::cos(M_PI * t / (2 * tau)), 0}; };
  p.differentiable_at_zero = true;
  return p;
}

namespace {

class TwoComponentClock final : public ClockModel {
 public:
  TwoComponentClock(ClockGrid grid, ProfileFunction profile)
      : grid_(grid), profile_(std::move(profile)) {
    validate_profile();
  }

  const ClockGrid& grid() const override { return grid_; }
  std::string name() const override { return "two-component-cos"; }

  // Window state: g(u) * click(0) + g(u -/+ tau) * click(+-1), branch by the
  // sign of u.
  Scalar c0(std::int64_t n, Real u) const override {
    if (n == 0) return profile_.g(u);
    if (u >= 0 && n == 1) return profile_.g(u - grid_.tau());
    if (u < 0 && n == -1) return profile_.g(u + grid_.tau());
    return {0, 0};
  }

  std::optional<std::int64_t> support_radius() const override { return 1; }
  // Off-diagonal columns switch branch at 0; the diagonal is smooth only when
  // the profile is.
  bool kinked_at_zero() const override { return true; }

 private:
  ClockGrid grid_;
  ProfileFunction profile_;

  void validate_profile() const {
    Real tau = grid_.tau();
    auto fail = [](const std::string& what) {
      throw std::invalid_argument("two-component profile: " + what);
    };
    if (std::abs(profile_.g(0.0) - Scalar{1, 0}) > 1e-8) fail("g(0) must be 1");
    if (std::abs(profile_.g(tau)) > 1e-8 || std::abs(profile_.g(-tau)) > 1e-8)
      fail("g(+-tau) must vanish");
    for (int i = 0; i < 65; ++i) {
      Real t = -tau + 2 * tau * i / 64;
      if (std::abs(std::abs(profile_.g(-t)) - std::abs(profile_.g(t))) > 1e-8)
        fail("|g(-t)| = |g(t)| violated at t = " + std::to_string(t));
    }
    for (int i = 0; i < 65; ++i) {
      Real u = tau * i / 64;
      Real p = std::norm(profile_.g(u)) + std::norm(profile_.g(u - tau));
      if (std::abs(p - 1.0) > 1e-8)
        fail("partition of unity violated at u = " + std::to_string(u) +
             " (|g(u)|^2 + |g(u-tau)|^2 = " + std::to_string(p) + ")");
    }
  }
};

class PiecewiseLinearClock final : public ClockModel {
 public:
  explicit PiecewiseLinearClock(ClockGrid grid) : grid_(grid) {}

  const ClockGrid& grid() const override { return grid_; }
  std::string name() const override { return "piecewise-linear"; }

  // Linear interpolation between neighbouring clicks. Intentionally
  // non-unit-norm for u != 0: |c0(0,u)|^2 + |c0(+-1,u)|^2 < 1.
  Scalar c0(std::int64_t n, Real u) const override {
    Real tau = grid_.tau();
    if (n == 0) return {1.0 - std::abs(u) / tau, 0};
    if (u >= 0 && n == 1) return {u / tau, 0};
    if (u < 0 && n == -1) return {-u / tau, 0};
    return {0, 0};
  }

  std::optional<std::int64_t> support_radius() const override { return 1; }
  bool kinked_at_zero() const override { return true; }

 private:
  ClockGrid grid_;
};

class CyclicClock final : public ClockModel {
 public:
  CyclicClock(CyclicSpec spec, ClockGrid grid) : spec_(spec), grid_(grid) {
    if (spec_.dimension < 8)
      throw ConfigError("cyclic clock: dimension must be >= 8");
    if (!(spec_.tau > 0)) throw ConfigError("cyclic clock: tau must be positive");
    if (grid_.tau() != spec_.tau)
      throw ConfigError("cyclic clock: grid tau differs from spec tau");
    if (grid_.size() > spec_.dimension)
      throw ConfigError("cyclic clock: grid wider than one cycle (" +
                        std::to_string(grid_.size()) + " > " +
                        std::to_string(spec_.dimension) + ")");
    k_lo_ = -((spec_.dimension - 1) / 2);
    k_hi_ = spec_.dimension / 2;
  }

  const ClockGrid& grid() const override { return grid_; }
  std::string name() const override { return "cyclic"; }

  // Closed-form Dirichlet kernel: (1/D) sum_k exp(-i omega_k u) exp(2 pi i k n / D)
  // with theta = (2 pi / D)(n - u/tau) collapses to
  // (1/D) e^{i (k_lo + k_hi) theta / 2} sin(D theta / 2) / sin(theta / 2).
  Scalar c0(std::int64_t n, Real u) const override {
    const Real D = static_cast<Real>(spec_.dimension);
    Real x = static_cast<Real>(n) - u / spec_.tau;
    Real theta = 2 * M_PI * x / D;
    Real half = 0.5 * theta;
    Scalar phase = std::exp(I * (static_cast<Real>(k_lo_ + k_hi_) * half));
    Real s = std::sin(half);
    if (std::abs(s) < 1e-5) {
      // Near-removable point: fall back to the explicit frequency sum.
      Scalar acc{0, 0};
      for (std::int64_t k = k_lo_; k <= k_hi_; ++k)
        acc += std::exp(I * (static_cast<Real>(k) * theta));
      return acc / D;
    }
    return phase * (std::sin(D * half) / (D * s));
  }

  std::optional<Scalar> cdot0_analytic(std::int64_t n) const override {
    // d/du c0(n, u) at 0 = (1/D) sum_k (-i omega_k) exp(2 pi i k n / D).
    const Real D = static_cast<Real>(spec_.dimension);
    Scalar acc{0, 0};
    for (std::int64_t k = k_lo_; k <= k_hi_; ++k)
      acc += -I * omega(k) * std::exp(I * (2 * M_PI * static_cast<Real>(k * n) / D));
    return acc / D;
  }

  bool exactly_unitary() const override { return true; }
  bool cyclic() const override { return true; }
  std::int64_t cycle_length() const override { return spec_.dimension; }

  Real omega(std::int64_t k) const {
    return 2 * M_PI * static_cast<Real>(k) / (static_cast<Real>(spec_.dimension) * spec_.tau);
  }
  std::int64_t k_lo() const { return k_lo_; }
  std::int64_t k_hi() const { return k_hi_; }

 private:
  CyclicSpec spec_;
  ClockGrid grid_;
  std::int64_t k_lo_, k_hi_;
};

}  // namespace

std::shared_ptr<ClockModel> make_two_component(const ClockGrid& grid,
                                               const ProfileFunction& profile) {
  return std::make_shared<TwoComponentClock>(grid, profile);
}

std::shared_ptr<ClockModel> make_piecewise_linear(const ClockGrid& grid) {
  return std::make_shared<PiecewiseLinearClock>(grid);
}

std::shared_ptr<ClockModel> make_cyclic(const CyclicSpec& spec,
                                        const ClockGrid& grid) {
  return std::make_shared<CyclicClock>(spec, grid);
}

ClockGrid cyclic_full_grid(const CyclicSpec& spec) {
  std::int64_t hi = spec.dimension / 2;
  return ClockGrid(spec.tau, hi - spec.dimension + 1, hi);
}

}  // namespace iqc
