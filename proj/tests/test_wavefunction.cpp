// Profile anchors use states whose U factor collapses to a Laguerre
// polynomial, giving closed-form node positions and point values.
#include <doctest.h>

#include "hc2d/eigensolver.hpp"
#include "hc2d/quadrature.hpp"
#include "hc2d/wavefunction.hpp"

#include <cmath>

using namespace hc2d;
using eigensolver::solve_state;
using wavefunction::build_profile;
using wavefunction::density_overlap;
using wavefunction::eval_radial_unnormalized;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kInnerL2Zero = std::sqrt(2.0 * (2.0 - kSqrt2));
const double kOuterL2Zero = std::sqrt(2.0 * (2.0 + kSqrt2));
} // namespace

TEST_SUITE("wavefunction") {

TEST_CASE("raw radial anchors") {
    const auto state = solve_state({0, 1}, kSqrt2); // m = 1: U = z - 1
    CHECK(eval_radial_unnormalized(state, kSqrt2)
          == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eval_radial_unnormalized(state, 2.0)
          == doctest::Approx(std::exp(-1.0) * 1.0).epsilon(1e-11));
    CHECK_THROWS_AS(eval_radial_unnormalized(state, 1.0), DomainError);
}

TEST_CASE("profile normalization, wall zero, and sign convention") {
    struct Case {
        int l, o;
        double r0;
    };
    for (const auto& c : {Case{0, 1, 1e-3}, Case{0, 2, 1.0823922},
                          Case{4, 1, 2.0}, Case{6, 3, 0.5}}) {
        const int l = c.l;
        const int o = c.o;
        const double r0 = c.r0;
        const auto p = build_profile(solve_state({l, o}, r0));
        CAPTURE(l);
        CAPTURE(o);
        CAPTURE(r0);
        CHECK(p.R_values[0] == 0.0);
        CHECK(p.rho_values[0] == 0.0);
        CHECK(p.r_grid.front() == r0);
        CHECK(p.r_grid.back() == p.r_max);

        // first nonzero sampled value positive
        for (double v : p.R_values) {
            if (v != 0.0) {
                CHECK(v > 0.0);
                break;
            }
        }

        const double mass = quadrature::integrate(
            [&p](double r) { return p.radial(r) * p.radial(r) * r; },
            r0, p.r_max);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));

        double peak = 0.0;
        for (double v : p.R_values) peak = std::max(peak, std::fabs(v));
        CHECK(std::fabs(p.R_values.back()) < 1e-10 * peak); // buried tail
    }
}

TEST_CASE("node counts follow the order") {
    CHECK(build_profile(solve_state({0, 1}, 1e-3)).node_count == 0);
    CHECK(build_profile(solve_state({4, 1}, 2.0)).node_count == 0);
    CHECK(build_profile(solve_state({0, 2}, 1.0823922)).node_count == 1);
    CHECK(build_profile(solve_state({2, 3}, 1.5)).node_count == 2);
}

TEST_CASE("the order-2 anchor state has its interior node at the outer Laguerre zero") {
    const auto p = build_profile(solve_state({0, 2}, kInnerL2Zero));
    REQUIRE(p.node_count == 1);
    CHECK(p.nodes[0] == doctest::Approx(kOuterL2Zero).epsilon(1e-9));
}

TEST_CASE("derivative matches a central difference") {
    const auto p = build_profile(solve_state({3, 2}, 1.2));
    for (double r : {1.3, 2.0, 3.7}) {
        const double h = 1e-5;
        const double fd = (p.radial(r + h) - p.radial(r - h)) / (2.0 * h);
        CHECK(p.radial_derivative(r) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("profiles shift right and their moments grow with r0") {
    double prev_mean = 0.0;
    for (double r0 : {1.0, 2.0, 3.0}) {
        const auto p = build_profile(solve_state({0, 1}, r0));
        const double mean = quadrature::integrate(
            [&p](double r) { return p.radial(r) * p.radial(r) * r * r; },
            p.state.r0, p.r_max);
        CHECK(mean > prev_mean);
        prev_mean = mean;
    }
}

TEST_CASE("overlap: normalization, orthogonality, continuity") {
    const auto a = build_profile(solve_state({0, 1}, 1.0));
    CHECK(density_overlap(a, a) == doctest::Approx(1.0).epsilon(1e-9));

    const auto b = build_profile(solve_state({0, 2}, 1.0));
    CHECK(std::fabs(density_overlap(a, b)) < 1e-6); // same-l eigenstates

    const auto shifted = build_profile(solve_state({0, 1}, 1.05));
    const double o = density_overlap(a, shifted);
    CHECK(o == density_overlap(shifted, a));
    CHECK(o > 0.9);
    CHECK(o < 1.0);
    CHECK(std::fabs(o) <= 1.0 + 1e-8);
}

TEST_CASE("grid configuration is validated") {
    const auto state = solve_state({0, 1}, 1.0);
    wavefunction::GridConfig config;
    config.samples = 4;
    CHECK_THROWS_AS(build_profile(state, config), DomainError);
}

} // TEST_SUITE
