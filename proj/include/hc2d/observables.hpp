#pragma once

#include "hc2d/eigensolver.hpp"
#include "hc2d/wavefunction.hpp"

namespace hc2d::observables {

// Physical decomposition of the level energy. kinetic carries the full
// Laplacian expectation including the centrifugal l^2/r^2 part; potential
// is the trap expectation <r^2/4>. kinetic + potential = total = energy.
struct EnergySplit {
    double kinetic;
    double potential;
    double total;
};

enum class QfiKind { density, parameter };

struct QfiValue {
    QfiKind kind;
    double value;
    double step_used; // finite-difference step (parameter kind only, else 0)
};

// Raw inner products behind the parameter QFI, exposed for convergence and
// gauge diagnostics: deriv_norm2 = <d_psi|d_psi>, norm_coupling = <psi|d_psi>
// (must vanish for real normalized states up to O(step^2)).
struct ParameterQfiParts {
    double deriv_norm2;
    double norm_coupling;
    double step;
};

EnergySplit energy_split(const wavefunction::RadialProfile& profile);

// F_rho = integral of (rho')^2 / rho * r dr = 4 * integral of R'^2 r dr.
QfiValue fisher_density(const wavefunction::RadialProfile& profile);

// Same functional evaluated as (2 R R')^2 / rho without the algebraic
// cancellation; used as a cross-check of fisher_density.
double fisher_density_direct(const wavefunction::RadialProfile& profile);

// QFI with respect to the core radius, F = 4 (<d_psi|d_psi> - <psi|d_psi>^2),
// from symmetric finite differences of sign-aligned normalized states at
// r0 +- step, zero-extended below their walls. Requires step <= 1e-2 * r0.
// Converges only as O(step): the strip between the two walls, where one
// state vanishes and the other does not, adds |step| * R'(r0)^2 * r0 to
// <d_psi|d_psi>. Use fisher_parameter_refined for the extrapolated value.
QfiValue fisher_parameter(const QuantumLabel& label, double r0, double step,
                          const eigensolver::SolverOptions& options = {});

ParameterQfiParts fisher_parameter_parts(const QuantumLabel& label, double r0, double step,
                                         const eigensolver::SolverOptions& options = {});

// Default step 1e-3 * max(1, r0), clamped to the step <= 1e-2 * r0 precondition.
double default_parameter_step(double r0);

// Default-step evaluation sharpened by one linear Richardson pass over
// {step, step/2}, cancelling the O(step) wall term; the result converges
// as O(step^2) under step halving.
QfiValue fisher_parameter_refined(const QuantumLabel& label, double r0,
                                  const eigensolver::SolverOptions& options = {});

} // namespace hc2d::observables
