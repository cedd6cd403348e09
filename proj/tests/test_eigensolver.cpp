// Closed-form anchors: U(-m, l+1, z) degenerates to Laguerre polynomials at
// integer m, so radii placed at Laguerre zeros give exactly known energies.
// Non-closed-form m values are frozen from a 40-digit independent solve.
#include <doctest.h>

#include "hc2d/eigensolver.hpp"

#include <cmath>

using namespace hc2d;
using eigensolver::boundary_function;
using eigensolver::solve_m_values;
using eigensolver::solve_state;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt10 = std::sqrt(10.0);
const double kInnerL2Zero = std::sqrt(2.0 * (2.0 - kSqrt2)); // 1.0823922003
const double kOuterL2Zero = std::sqrt(2.0 * (2.0 + kSqrt2)); // 2.6131259298
} // namespace

TEST_SUITE("eigensolver") {

TEST_CASE("boundary function anchors") {
    CHECK(boundary_function(0, kSqrt2, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(boundary_function(0, kSqrt2, 0.0) == 1.0);
    CHECK(boundary_function(4, kSqrt10, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("boundary function rejects bad inputs") {
    CHECK_THROWS_AS(boundary_function(-1, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(boundary_function(0, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(boundary_function(0, -2.0, 0.5), DomainError);
}

TEST_CASE("exact Laguerre anchor energies") {
    CHECK(solve_state({0, 1}, kSqrt2).energy == doctest::Approx(3.0).epsilon(1e-11));
    CHECK(solve_state({4, 1}, kSqrt10).energy == doctest::Approx(7.0).epsilon(1e-11));
    CHECK(solve_state({0, 2}, kInnerL2Zero).energy == doctest::Approx(5.0).epsilon(1e-11));
    CHECK(solve_state({0, 1}, kOuterL2Zero).energy == doctest::Approx(5.0).epsilon(1e-11));
}

TEST_CASE("abbreviated decimal radii sit within their truncation error of the anchors") {
    // the 8-digit radii are ~3e-9 and ~3e-8 short of the exact Laguerre zeros
    CHECK(std::fabs(solve_state({0, 2}, 1.0823922).energy - 5.0) < 5e-10);
    CHECK(std::fabs(solve_state({0, 1}, 2.6131259).energy - 5.0) < 1e-7);
    CHECK(std::fabs(solve_state({0, 1}, 2.6131259).energy - 5.0) > 1e-9);
}

TEST_CASE("ordered roots with the m=2 anchor in second place") {
    const auto roots = solve_m_values(0, 1.0823922, 2);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] < 2.0);
    CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("frozen m-root regression values") {
    CHECK(solve_m_values(0, 1.0, 1)[0]
          == doctest::Approx(0.7238868139259470806).epsilon(1e-11));
    CHECK(solve_m_values(0, 0.001, 1)[0]
          == doctest::Approx(0.07114915539549915463).epsilon(1e-9));
    CHECK(solve_m_values(3, 2.0, 2)[1]
          == doctest::Approx(1.682836554879487364).epsilon(1e-11));
    CHECK(solve_m_values(6, 4.0, 3)[2]
          == doctest::Approx(4.409774132890891958).epsilon(1e-11));
    CHECK(solve_m_values(0, 4.0, 2)[1]
          == doctest::Approx(5.339204197172899879).epsilon(1e-11));
    CHECK(solve_m_values(4, 4.0, 1)[0]
          == doctest::Approx(1.868873415292696339).epsilon(1e-11));
}

TEST_CASE("zero-range limit: roots approach integers, power-law for l >= 1") {
    // m_1 for l = 0 converges only logarithmically and sits in (0.06, 0.08)
    const double m0 = solve_m_values(0, 1e-3, 1)[0];
    CHECK(m0 > 0.06);
    CHECK(m0 < 0.08);

    for (int l : {1, 2, 3}) {
        const auto roots = solve_m_values(l, 1e-4, 3);
        for (int o = 1; o <= 3; ++o) {
            CAPTURE(l);
            CAPTURE(o);
            CHECK(std::fabs(roots[o - 1] - (o - 1)) < 1e-6);
        }
    }
}

TEST_CASE("m grows monotonically with r0 and orders stay separated") {
    for (int l : {0, 2, 5}) {
        double prev1 = 0.0, prev2 = 0.0;
        for (double r0 : {0.5, 1.0, 1.5, 2.5, 4.0, 6.0}) {
            const auto roots = solve_m_values(l, r0, 2);
            CAPTURE(l);
            CAPTURE(r0);
            CHECK(roots[0] > prev1);
            CHECK(roots[1] > prev2);
            CHECK(roots[1] - roots[0] > 0.05); // scan cells hold at most one root
            prev1 = roots[0];
            prev2 = roots[1];
        }
    }
}

TEST_CASE("energy composition and state fields") {
    const auto state = solve_state({3, 2}, 2.0);
    CHECK(state.label.l == 3);
    CHECK(state.label.order == 2);
    CHECK(state.r0 == 2.0);
    CHECK(state.m > 0.0);
    CHECK(state.energy == state.label.l + 1 + 2.0 * state.m);
}

TEST_CASE("free-spectrum constants") {
    CHECK(eigensolver::free_energy({0, 1}) == 1.0);
    CHECK(eigensolver::free_energy({3, 1}) == 4.0);
    CHECK(eigensolver::free_energy({2, 3}) == 7.0);
}

TEST_CASE("error paths: bad label, bad count, scan ceiling") {
    CHECK_THROWS_AS(solve_state({0, 0}, 1.0), DomainError);
    CHECK_THROWS_AS(solve_m_values(0, 1.0, 0), DomainError);
    eigensolver::SolverOptions tiny;
    tiny.m_max = 0.5;
    CHECK_THROWS_AS(solve_m_values(0, 1.0, 3, tiny), ComputeError);
}

} // TEST_SUITE
