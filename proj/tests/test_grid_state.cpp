#include <doctest.h>

#include <cmath>

#include "iqc/state.hpp"

using namespace iqc;

TEST_CASE("grid geometry and index mapping") {
  ClockGrid g(0.5, -3, 4);
  CHECK(g.size() == 8);
  CHECK(g.contains(-3));
  CHECK(g.contains(4));
  CHECK(!g.contains(5));
  CHECK(g.slot(-3) == 0);
  CHECK(g.slot(4) == 7);
  CHECK(g.index_at(0) == -3);
  CHECK(g.index_at(7) == 4);
  for (std::int64_t n = g.index_min(); n <= g.index_max(); ++n) {
    CHECK(g.index_at(g.slot(n)) == n);
  }
}

TEST_CASE("tick is an exact multiple, symmetric in sign") {
  ClockGrid g(0.1, -40, 40);
  for (std::int64_t n = 0; n <= 40; ++n) {
    // bitwise equality: tick must never be accumulated
    CHECK(g.tick(-n) == -g.tick(n));
    CHECK(g.tick(n) == doctest::Approx(0.1 * double(n)).epsilon(1e-15));
  }
}

TEST_CASE("grid rejects impossible windows") {
  CHECK_THROWS_AS(ClockGrid(0.0, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ClockGrid(-1.0, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ClockGrid(1.0, 1, 4), std::invalid_argument);   // 0 missing
  CHECK_THROWS_AS(ClockGrid(1.0, -4, -1), std::invalid_argument); // 0 missing
  CHECK_THROWS_AS(ClockGrid(1.0, 3, -3), std::invalid_argument);
}

TEST_CASE("slot on a missing index throws out_of_range") {
  ClockGrid g(1.0, -2, 2);
  CHECK_THROWS_AS((void)g.slot(3), std::out_of_range);
  CHECK_THROWS_AS((void)g.slot(-3), std::out_of_range);
}

TEST_CASE("boundary band flags the outermost tenth per side") {
  ClockGrid g(1.0, -20, 20);  // 41 indices, band = 4
  CHECK(g.boundary_band() == 4);
  CHECK(g.in_boundary_band(20));
  CHECK(g.in_boundary_band(17));
  CHECK(!g.in_boundary_band(16));
  CHECK(g.in_boundary_band(-17));
  CHECK(!g.in_boundary_band(0));
}

TEST_CASE("click states are orthonormal") {
  ClockGrid g(1.0, -4, 4);
  ClockState a = make_click(g, 0);
  ClockState b = make_click(g, 3);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(a.inner(b)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(a.inner(a) - Scalar(1, 0)) < 1e-15);
  CHECK(a.coefficient(0) == Scalar(1, 0));
  CHECK(a.coefficient(1) == Scalar(0, 0));
}

TEST_CASE("inner conjugates the left argument") {
  ClockGrid g(1.0, -2, 2);
  ClockState a = make_state(g, {{0, Scalar(0, 1)}});  // i * click0
  ClockState b = make_state(g, {{0, Scalar(1, 0)}});
  CHECK(a.inner(b) == Scalar(0, -1));
  CHECK(b.inner(a) == Scalar(0, 1));
}

TEST_CASE("make_state rejects duplicates, range violations, zero normalization") {
  ClockGrid g(1.0, -2, 2);
  CHECK_THROWS_AS(make_state(g, {{0, {1, 0}}, {0, {1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_state(g, {{7, {1, 0}}}), std::out_of_range);
  ClockState zero = make_state(g, {});
  CHECK_THROWS_AS(zero.normalized(), std::invalid_argument);
}

TEST_CASE("inner on mismatched grids throws") {
  ClockGrid g1(1.0, -2, 2), g2(1.0, -3, 3);
  ClockState a = make_click(g1, 0);
  ClockState b = make_click(g2, 0);
  CHECK_THROWS_AS((void)a.inner(b), std::invalid_argument);
}

TEST_CASE("weighted seminorm counts index magnitude") {
  ClockGrid g(1.0, -4, 4);
  const Real amp = 1.0 / std::sqrt(2.0);
  ClockState s = make_state(g, {{1, {amp, 0}}, {-3, {amp, 0}}});
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.weighted_seminorm() == doctest::Approx(4.0 * amp).epsilon(1e-14));
}

TEST_CASE("membership diagnostic isolates boundary mass") {
  ClockGrid g(1.0, -20, 20);
  ClockState inner_state = make_click(g, 0);
  ClockState edge_state = make_click(g, 20);
  CHECK(diagnose_membership(inner_state).boundary_mass == doctest::Approx(0.0));
  CHECK(diagnose_membership(edge_state).boundary_mass == doctest::Approx(1.0));
  CHECK(diagnose_membership(edge_state).norm == doctest::Approx(1.0));
  CHECK(diagnose_membership(edge_state).weighted_seminorm == doctest::Approx(20.0));
}

TEST_CASE("normalized rescales to unit norm") {
  ClockGrid g(1.0, -2, 2);
  ClockState s = make_state(g, {{0, {3, 0}}, {1, {0, 4}}});
  ClockState n = s.normalized();
  CHECK(n.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(n.coefficient(0).real() == doctest::Approx(0.6));
  CHECK(n.coefficient(1).imag() == doctest::Approx(0.8));
}
