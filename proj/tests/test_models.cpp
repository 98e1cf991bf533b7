#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

#include "iqc/models.hpp"
#include "iqc/operators.hpp"

using namespace iqc;

namespace {
constexpr Real pi = std::numbers::pi;
}

TEST_CASE("two-component cosine overlaps") {
  ClockGrid g(1.0, -4, 4);
  auto model = make_two_component(g, cosine_profile(1.0));
  CHECK(model->c0(0, 0.0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(model->c0(0, 0.25).real() == doctest::Approx(std::cos(pi / 8)).epsilon(1e-15));
  CHECK(model->c0(1, 0.25).real() == doctest::Approx(std::cos(3 * pi / 8)).epsilon(1e-15));
  CHECK(model->c0(0, 0.5).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(model->c0(1, 0.5).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  // the advanced component only exists on the matching side of 0
  CHECK(model->c0(1, -0.1) == Scalar(0, 0));
  CHECK(model->c0(-1, 0.1) == Scalar(0, 0));
  CHECK(model->c0(-1, -0.25).real() == doctest::Approx(std::cos(3 * pi / 8)).epsilon(1e-15));
  CHECK(model->c0(2, 0.3) == Scalar(0, 0));
  CHECK(model->support_radius().value() == 1);
  CHECK(model->kinked_at_zero());
  // unit-norm along the curve, but still a window approximation
  CHECK(!model->exactly_unitary());
}

TEST_CASE("profile validation rejects a non-partitioning shape") {
  ClockGrid g(1.0, -4, 4);
  ProfileFunction triangle{[](Real u) { return Scalar(1.0 - std::abs(u), 0); }, false};
  CHECK_THROWS_AS(make_two_component(g, triangle), std::invalid_argument);

  ProfileFunction shifted{[](Real u) { return Scalar(std::cos(pi * u / 2) + 0.1, 0); },
                          true};
  CHECK_THROWS_AS(make_two_component(g, shifted), std::invalid_argument);
}

TEST_CASE("piecewise-linear overlaps") {
  auto model = make_piecewise_linear(ClockGrid(1.0, -4, 4));
  CHECK(model->c0(0, 0.3).real() == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(model->c0(1, 0.3).real() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(model->c0(-1, -0.3).real() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(model->c0(1, -0.3) == Scalar(0, 0));
  CHECK(model->c0(0, -0.5).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(!model->exactly_unitary());
  CHECK(model->kinked_at_zero());
}

TEST_CASE("free overlap accessor enforces window and range") {
  auto model = make_piecewise_linear(ClockGrid(1.0, -4, 4));
  CHECK(c(*model, 2, 1, 0.25).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(c(*model, 0, 0, 0.7), std::domain_error);
  CHECK_THROWS_AS(c(*model, 5, 0, 0.1), std::out_of_range);
  CHECK_THROWS_AS(c(*model, 0, -5, 0.1), std::out_of_range);
}

TEST_CASE("cyclic model is a delta at u = 0 and unitary in between") {
  const CyclicSpec spec{16, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const auto& g = model->grid();
  CHECK(g.index_min() == -7);
  CHECK(g.index_max() == 8);

  for (std::int64_t n = g.index_min(); n <= g.index_max(); ++n) {
    const Real want = n == 0 ? 1.0 : 0.0;
    CHECK(std::abs(model->c0(n, 0.0) - Scalar(want, 0)) < 1e-13);
  }
  Real mass = 0;
  for (std::int64_t n = g.index_min(); n <= g.index_max(); ++n) {
    mass += std::norm(model->c0(n, 0.3));
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("cyclic closed form matches the explicit frequency sum") {
  const CyclicSpec spec{8, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const Eigen::VectorXd w = oracle::cyclic_frequencies(8, 1.0);
  const std::int64_t k_lo = -3;

  for (std::int64_t r = -3; r <= 4; ++r) {
    for (Real u : {0.5, -0.5, 0.37, -0.12, 0.0}) {
      Scalar direct{0, 0};
      for (std::int64_t i = 0; i < 8; ++i) {
        const Real k = Real(k_lo + i);
        direct += std::exp(Scalar(0, 2 * pi * k * Real(r) / 8.0)) *
                  std::exp(Scalar(0, -w(i) * u)) / 8.0;
      }
      CHECK(std::abs(model->c0(r, u) - direct) < 1e-13);
    }
  }
  // frozen spot value, computed independently
  const Scalar v = model->c0(0, 0.5);
  CHECK(v.real() == doctest::Approx(0.62841743651573101).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(-0.125).epsilon(1e-12));
}

TEST_CASE("cyclic overlaps are periodic in the click offset") {
  const CyclicSpec spec{12, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  for (std::int64_t r : {-5LL, -1LL, 0LL, 3LL}) {
    for (Real u : {0.2, -0.4}) {
      CHECK(std::abs(model->c0(r, u) - model->c0(r + 12, u)) < 1e-12);
      CHECK(std::abs(model->c0(r, u) - model->c0(r - 12, u)) < 1e-12);
    }
  }
}

TEST_CASE("cyclic analytic derivative at zero offset is -i times the mean frequency") {
  const CyclicSpec spec{8, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const Scalar d0 = c_dot0(*model, 0);
  CHECK(std::abs(d0 - Scalar(0, -pi / 8.0)) < 1e-13);
}

TEST_CASE("cyclic construction rules") {
  CHECK_THROWS_AS(make_cyclic(CyclicSpec{4, 1.0}, ClockGrid(1.0, -1, 2)), ConfigError);
  CHECK_THROWS_AS(make_cyclic(CyclicSpec{8, 1.0}, ClockGrid(1.0, -8, 8)), ConfigError);
  CHECK_THROWS_AS(make_cyclic(CyclicSpec{8, -1.0}, ClockGrid(1.0, -3, 4)), ConfigError);
  // tau mismatch between spec and grid
  CHECK_THROWS_AS(make_cyclic(CyclicSpec{8, 1.0}, ClockGrid(0.5, -3, 4)), ConfigError);
  // a narrower grid inside the cycle is allowed
  CHECK_NOTHROW(make_cyclic(CyclicSpec{8, 1.0}, ClockGrid(1.0, -2, 2)));
}

TEST_CASE("evolving a click by one period lands on the next click") {
  const CyclicSpec spec{16, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const ClockState click = make_click(model->grid(), 0);
  const EvolveResult moved = evolve(*model, click, 1.0);
  CHECK(moved.mass_loss == doctest::Approx(0.0).epsilon(1e-14));
  for (std::int64_t n = model->grid().index_min(); n <= model->grid().index_max(); ++n) {
    const Real want = n == 1 ? 1.0 : 0.0;
    CHECK(std::abs(moved.state.coefficient(n) - Scalar(want, 0)) < 1e-12);
  }
}

TEST_CASE("cyclic evolution matches the dense matrix exponential") {
  const CyclicSpec spec{8, 1.0};
  auto model = make_cyclic(spec, cyclic_full_grid(spec));
  const Eigen::MatrixXcd v = oracle::cyclic_dft(8);
  const Eigen::MatrixXcd h =
      v * oracle::cyclic_frequencies(8, 1.0).cast<Scalar>().asDiagonal() * v.adjoint();

  const ClockState click = make_click(model->grid(), 0);
  for (Real t : {0.5, -0.37, 1.8}) {
    const Eigen::MatrixXcd u_t = oracle::expm(Scalar(0, -t) * h);
    const Eigen::VectorXcd want = u_t * click.coefficients();
    const Eigen::VectorXcd got = evolve(*model, click, t).state.coefficients();
    CHECK((want - got).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("line-model evolution: interior mass is conserved or honestly lost") {
  auto pl = make_piecewise_linear(ClockGrid(1.0, -8, 8));
  const ClockState click = make_click(pl->grid(), 0);

  const EvolveResult inside = evolve(*pl, click, 0.3);
  CHECK(inside.mass_loss == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(inside.state.coefficient(0).real() == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(inside.state.coefficient(1).real() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(inside.state.norm() * inside.state.norm() ==
        doctest::Approx(0.58).epsilon(1e-14));

  // pushing a click off the edge loses everything
  const ClockState edge = make_click(pl->grid(), 8);
  const EvolveResult gone = evolve(*pl, edge, 1.0);
  CHECK(gone.mass_loss == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gone.state.norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("two-component evolution preserves norm inside the window") {
  auto model = make_two_component(ClockGrid(1.0, -8, 8), cosine_profile(1.0));
  const ClockState click = make_click(model->grid(), 0);
  for (Real t : {0.25, -0.4, 1.3}) {
    const EvolveResult moved = evolve(*model, click, t);
    CHECK(moved.state.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moved.mass_loss == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("model names are stable identifiers") {
  CHECK(make_piecewise_linear(ClockGrid(1.0, -4, 4))->name() == "piecewise-linear");
  CHECK(make_two_component(ClockGrid(1.0, -4, 4), cosine_profile(1.0))->name() ==
        "two-component-cos");
  const CyclicSpec spec{8, 1.0};
  CHECK(make_cyclic(spec, cyclic_full_grid(spec))->name() == "cyclic");
}
