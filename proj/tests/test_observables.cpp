// Closed-form anchor: the (l=0, order=1) state at r0 = sqrt(2) has
// R ~ exp(-r^2/4) (r^2/2 - 1), E = 3, and exactly
//   potential = 2, kinetic = 1, F_rho = 4.
#include <doctest.h>

#include "hc2d/eigensolver.hpp"
#include "hc2d/observables.hpp"
#include "hc2d/quadrature.hpp"
#include "hc2d/wavefunction.hpp"

#include <cmath>

using namespace hc2d;
using eigensolver::solve_state;
using wavefunction::build_profile;

TEST_SUITE("observables") {

TEST_CASE("energy split hits the closed-form anchor") {
    const auto profile = build_profile(solve_state({0, 1}, std::sqrt(2.0)));
    const auto split = observables::energy_split(profile);
    CHECK(split.potential == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(split.kinetic == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(split.total == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("kinetic + potential reproduces the eigenvalue") {
    for (int l : {0, 2, 5}) {
        for (int order : {1, 2}) {
            for (double r0 : {0.7, 2.0}) {
                const auto state = solve_state({l, order}, r0);
                const auto split = observables::energy_split(build_profile(state));
                CAPTURE(l);
                CAPTURE(order);
                CAPTURE(r0);
                CHECK(split.kinetic > 0.0);
                CHECK(split.potential > 0.0);
                CHECK(split.kinetic + split.potential
                      == doctest::Approx(state.energy).epsilon(1e-8));
                CHECK(split.total == doctest::Approx(state.energy).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("tight-core limit of the ground split") {
    const auto profile = build_profile(solve_state({0, 1}, 1e-3));
    const auto split = observables::energy_split(profile);
    CHECK(split.total == doctest::Approx(1.1422983107909983).epsilon(1e-10));
    CHECK(split.kinetic == doctest::Approx(0.566133517215).epsilon(1e-9));
    CHECK(split.potential == doctest::Approx(0.576164793576).epsilon(1e-9));

    const auto frho = observables::fisher_density(profile);
    CHECK(frho.value == doctest::Approx(2.26453406886).epsilon(1e-9));
}

TEST_CASE("density Fisher information, two evaluations") {
    const auto anchor = build_profile(solve_state({0, 1}, std::sqrt(2.0)));
    const auto frho = observables::fisher_density(anchor);
    CHECK(frho.kind == observables::QfiKind::density);
    CHECK(frho.step_used == 0.0);
    CHECK(frho.value == doctest::Approx(4.0).epsilon(1e-9));

    struct Case {
        int l, order;
        double r0;
    };
    for (const auto& c : {Case{0, 2, 1.1}, Case{4, 1, 2.0}, Case{2, 3, 0.8}}) {
        const auto p = build_profile(solve_state({c.l, c.order}, c.r0));
        const double a = observables::fisher_density(p).value;
        const double b = observables::fisher_density_direct(p);
        CAPTURE(c.l);
        CAPTURE(c.order);
        CHECK(a > 0.0);
        CHECK(a == doctest::Approx(b).epsilon(1e-7));
    }
}

TEST_CASE("density Fisher information grows monotonically with the core size") {
    // a wider core squeezes the density against the trap, steepening gradients
    for (const QuantumLabel label : {QuantumLabel{0, 1}, QuantumLabel{4, 1}}) {
        double previous = 0.0;
        for (int k = 0; k <= 12; ++k) {
            const double r0 = 1.0 + 0.25 * k;
            const auto p = build_profile(solve_state(label, r0));
            const double value = observables::fisher_density(p).value;
            CAPTURE(label.l);
            CAPTURE(r0);
            CHECK(value > previous);
            previous = value;
        }
    }
}

TEST_CASE("parameter QFI matches a pointwise finite-difference evaluation") {
    const QuantumLabel label{0, 1};
    const double r0 = 1.0;

    const auto center = build_profile(solve_state(label, r0));
    const auto pointwise = [&](double step) {
        const auto plus = build_profile(solve_state(label, r0 + step));
        const auto minus = build_profile(solve_state(label, r0 - step));
        const auto dpsi = [&](double r) {
            return (plus.radial(r) - minus.radial(r)) / (2.0 * step);
        };
        const double hi = std::max(center.r_max, plus.r_max);
        const double dn2 = quadrature::integrate(
            [&](double r) { return dpsi(r) * dpsi(r) * r; }, minus.state.r0, hi);
        const double coupling = quadrature::integrate(
            [&](double r) { return center.radial(r) * dpsi(r) * r; }, minus.state.r0, hi);
        CHECK(std::fabs(coupling) < 1e-4);
        return 4.0 * (dn2 - coupling * coupling);
    };

    const double step = 1e-3;
    const double pw = pointwise(step);
    const double pw_half = pointwise(0.5 * step);

    const auto qfi = observables::fisher_parameter(label, r0, step);
    CHECK(qfi.kind == observables::QfiKind::parameter);
    CHECK(qfi.step_used == step);
    CHECK(qfi.value > 0.0);
    // both raw estimators carry O(step) wall terms with different prefactors,
    // so they agree only loosely at a fixed step
    CHECK(qfi.value == doctest::Approx(pw).epsilon(1e-2));

    // after one linear Richardson pass the wall terms cancel on both sides
    const auto refined = observables::fisher_parameter_refined(label, r0);
    const double pw_refined = 2.0 * pw_half - pw;
    CHECK(refined.value == doctest::Approx(pw_refined).epsilon(1e-4));
}

TEST_CASE("norm coupling vanishes at second order in the step") {
    const auto wide = observables::fisher_parameter_parts({0, 2}, 2.0, 2e-3);
    const auto narrow = observables::fisher_parameter_parts({0, 2}, 2.0, 1e-3);
    CHECK(std::fabs(wide.norm_coupling) < 1e-3);
    // halving the step cuts the O(step^2) residue by about 4
    CHECK(std::fabs(narrow.norm_coupling) < 0.5 * std::fabs(wide.norm_coupling) + 1e-12);
}

TEST_CASE("step refinement is consistent and stable") {
    const QuantumLabel label{4, 1};
    const double r0 = 2.0;

    const double step = observables::default_parameter_step(r0);
    const auto coarse = observables::fisher_parameter(label, r0, step);
    const auto fine = observables::fisher_parameter(label, r0, 0.5 * step);
    const auto refined = observables::fisher_parameter_refined(label, r0);
    CHECK(refined.step_used == 0.5 * step);
    CHECK(refined.value == doctest::Approx(2.0 * fine.value - coarse.value).epsilon(1e-12));

    // one more halving moves the extrapolated value far less than the raw one
    const auto finer = observables::fisher_parameter(label, r0, 0.25 * step);
    const double again = 2.0 * finer.value - fine.value;
    CHECK(refined.value == doctest::Approx(again).epsilon(1e-5));
    CHECK(std::fabs(refined.value - again) < 0.05 * std::fabs(coarse.value - fine.value));
}

TEST_CASE("refined parameter QFI matches a high-precision reference") {
    // frozen from an independent 40-digit evaluation of the same estimator
    // chain: root solve, overlap quadrature, one linear Richardson pass
    struct Case {
        int l, order;
        double r0, reference;
    };
    for (const auto& c : {Case{0, 2, 1.1, 6.581859909652354},
                          Case{4, 1, 1.1, 0.1477740172843388},
                          Case{4, 1, 2.0, 1.970854517088821}}) {
        const auto qfi = observables::fisher_parameter_refined({c.l, c.order}, c.r0);
        CAPTURE(c.l);
        CAPTURE(c.order);
        CHECK(qfi.value == doctest::Approx(c.reference).epsilon(1e-7));
    }
}

TEST_CASE("default step respects the precondition") {
    CHECK(observables::default_parameter_step(2.0) == doctest::Approx(1e-3 * 2.0));
    CHECK(observables::default_parameter_step(0.5) == doctest::Approx(1e-3));
    CHECK(observables::default_parameter_step(0.05) == doctest::Approx(5e-4));
    for (double r0 : {0.03, 0.5, 1.0, 7.0}) {
        CHECK(observables::default_parameter_step(r0) <= 1e-2 * r0);
    }
}

TEST_CASE("parameter QFI input validation") {
    CHECK_THROWS_AS(observables::fisher_parameter({0, 1}, 1.0, 0.02), DomainError);
    CHECK_THROWS_AS(observables::fisher_parameter({0, 1}, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(observables::fisher_parameter({0, 1}, 1.0, -1e-3), DomainError);
}

} // TEST_SUITE
