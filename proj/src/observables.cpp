#include "hc2d/observables.hpp"
#include "hc2d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hc2d::observables {

using wavefunction::RadialProfile;

EnergySplit energy_split(const RadialProfile& profile) {
    const double r0 = profile.state.r0;
    const double l = profile.state.label.l;
    const double potential = quadrature::integrate(
        [&profile](double r) {
            const double v = profile.radial(r);
            return v * v * 0.25 * r * r * r;
        },
        r0, profile.r_max);
    // integration-by-parts form; the boundary terms vanish (R(r0)=0, decay)
    const double kinetic = quadrature::integrate(
        [&profile, l](double r) {
            const double d = profile.radial_derivative(r);
            const double v = profile.radial(r);
            return (d * d + l * l * v * v / (r * r)) * r;
        },
        r0, profile.r_max);
    return {kinetic, potential, kinetic + potential};
}

QfiValue fisher_density(const RadialProfile& profile) {
    const double value = 4.0 * quadrature::integrate(
        [&profile](double r) {
            const double d = profile.radial_derivative(r);
            return d * d * r;
        },
        profile.state.r0, profile.r_max);
    return {QfiKind::density, value, 0.0};
}

double fisher_density_direct(const RadialProfile& profile) {
    return quadrature::integrate(
        [&profile](double r) {
            const double v = profile.radial(r);
            const double d = profile.radial_derivative(r);
            const double rho = v * v;
            if (rho < 1e-280) return 4.0 * d * d * r; // removable 0/0 at nodes
            const double drho = 2.0 * v * d;
            return drho * drho / rho * r;
        },
        profile.state.r0, profile.r_max);
}

namespace {

ParameterQfiParts parts_impl(const QuantumLabel& label, double r0, double step,
                             const eigensolver::SolverOptions& options) {
    if (!(step > 0.0)) {
        throw DomainError("fisher_parameter: step must be positive");
    }
    if (step > 1e-2 * r0) {
        throw DomainError("fisher_parameter: step " + std::to_string(step)
                          + " exceeds 1e-2 * r0 = " + std::to_string(1e-2 * r0));
    }
    const auto center = wavefunction::build_profile(
        eigensolver::solve_state(label, r0, options));
    const auto plus = wavefunction::build_profile(
        eigensolver::solve_state(label, r0 + step, options));
    const auto minus = wavefunction::build_profile(
        eigensolver::solve_state(label, r0 - step, options));

    // The profile gauge (first nonzero value positive) already aligns
    // same-label states at nearby r0; a non-positive overlap with the center
    // means the bracketing states are no longer small deformations of it.
    const double o_plus = wavefunction::density_overlap(center, plus);
    const double o_minus = wavefunction::density_overlap(center, minus);
    if (o_plus <= 0.0 || o_minus <= 0.0) {
        throw ComputeError("fisher_parameter: step too large, bracketing states failed "
                           "sign alignment (overlap <= 0) at r0=" + std::to_string(r0));
    }
    const double o_pm = wavefunction::density_overlap(plus, minus);

    // |d_psi> ~ (psi_+ - psi_-) / (2 step): norms reduce to overlaps
    const double deriv_norm2 = (1.0 - o_pm) / (2.0 * step * step);
    const double norm_coupling = (o_plus - o_minus) / (2.0 * step);
    return {deriv_norm2, norm_coupling, step};
}

} // namespace

ParameterQfiParts fisher_parameter_parts(const QuantumLabel& label, double r0, double step,
                                         const eigensolver::SolverOptions& options) {
    return parts_impl(label, r0, step, options);
}

QfiValue fisher_parameter(const QuantumLabel& label, double r0, double step,
                          const eigensolver::SolverOptions& options) {
    const auto parts = parts_impl(label, r0, step, options);
    double value = 4.0 * (parts.deriv_norm2 - parts.norm_coupling * parts.norm_coupling);
    if (value < 0.0 && value > -1e-10) value = 0.0; // round-off guard, QFI >= 0
    return {QfiKind::parameter, value, step};
}

double default_parameter_step(double r0) {
    return std::min(1e-3 * std::max(1.0, r0), 1e-2 * r0);
}

QfiValue fisher_parameter_refined(const QuantumLabel& label, double r0,
                                  const eigensolver::SolverOptions& options) {
    const double step = default_parameter_step(r0);
    const auto coarse = fisher_parameter(label, r0, step, options);
    const auto fine = fisher_parameter(label, r0, 0.5 * step, options);
    // The symmetric difference is first order here, not second: the strip
    // between the two wall positions contributes |step| * R'(r0)^2 to the
    // derivative norm. One linear Richardson pass cancels that term.
    double value = 2.0 * fine.value - coarse.value;
    if (value < 0.0 && value > -1e-10) value = 0.0;
    return {QfiKind::parameter, value, 0.5 * step};
}

} // namespace hc2d::observables
