#pragma once

#include "hc2d/eigensolver.hpp"

#include <vector>

namespace hc2d::wavefunction {

struct GridConfig {
    int samples = 4000;      // uniform diagnostic grid size
    double panel_tol = 1e-12; // quadrature panel tolerance
};

// Normalized radial eigenfunction sampled on [r0, r_max], with its density
// rho = R^2. Normalization convention: integral of rho(r) r dr over
// [r0, r_max] equals 1 (no angular 2*pi factor). Sign convention: the first
// nonzero sampled R value is positive. node_count counts interior zeros
// only, which equals order - 1 (the wall zero at r0 is not a node).
struct RadialProfile {
    EigenState state;
    std::vector<double> r_grid;
    std::vector<double> R_values;
    std::vector<double> rho_values;
    double r_max = 0.0;
    int node_count = 0;
    std::vector<double> nodes;    // refined interior zero locations
    double norm_constant = 1.0;   // signed scale applied to the raw radial form

    // Normalized R(r); zero below the wall (hard-core exclusion).
    double radial(double r) const;
    // dR/dr of the normalized function; zero below the wall.
    double radial_derivative(double r) const;
};

// Raw (unnormalized) radial form r^l e^{-r^2/4} U(-m, l+1, r^2/2).
double eval_radial_unnormalized(const EigenState& state, double r);

// Normalize, sample, and characterize a solved state.
// r_max = max(2*sqrt(E) + 10, r0 + 10) puts the cutoff ~10 oscillator
// lengths past the classical turning point, burying the Gaussian tail.
RadialProfile build_profile(const EigenState& state, const GridConfig& config = {});

// integral of R_p(r) R_q(r) r dr with each factor zero-extended below its
// own wall; symmetric, and bounded by 1 in magnitude up to quadrature noise.
double density_overlap(const RadialProfile& p, const RadialProfile& q);

} // namespace hc2d::wavefunction
