#include "hc2d/wavefunction.hpp"
#include "hc2d/quadrature.hpp"
#include "hc2d/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hc2d::wavefunction {

namespace {

double raw_radial(int l, double m, double r) {
    const double z = 0.5 * r * r;
    const double u = specfun::kummer_u_intb({-m, l + 1, z}).value;
    return std::pow(r, l) * std::exp(-0.25 * r * r) * u;
}

// d/dr of the raw form. Uses dU/dz = -a U(a+1, b+1, z).
double raw_radial_derivative(int l, double m, double r) {
    const double z = 0.5 * r * r;
    const double u = specfun::kummer_u_intb({-m, l + 1, z}).value;
    const double du = m * specfun::kummer_u_intb({-m + 1.0, l + 2, z}).value;
    const double rl = std::pow(r, l);
    return std::exp(-0.25 * r * r)
         * (l * rl / r * u - 0.5 * r * rl * u + rl * r * du);
}

// Interior zero refined by bisection between samples of opposite sign.
double refine_node(const RadialProfile& p, double lo, double hi) {
    double flo = p.radial(lo);
    for (int iter = 0; iter < 100 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p.radial(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double RadialProfile::radial(double r) const {
    // exact Dirichlet zero at the wall; the raw evaluation would return the
    // solver residual there (derivative stays finite, so no <= on it below)
    if (r <= state.r0) return 0.0;
    return norm_constant * raw_radial(state.label.l, state.m, r);
}

double RadialProfile::radial_derivative(double r) const {
    if (r < state.r0) return 0.0;
    return norm_constant * raw_radial_derivative(state.label.l, state.m, r);
}

double eval_radial_unnormalized(const EigenState& state, double r) {
    if (r < state.r0) {
        throw DomainError("wavefunction: r must be >= r0, got r=" + std::to_string(r)
                          + " with r0=" + std::to_string(state.r0));
    }
    return raw_radial(state.label.l, state.m, r);
}

RadialProfile build_profile(const EigenState& state, const GridConfig& config) {
    if (config.samples < 16) {
        throw DomainError("wavefunction: grid must have at least 16 samples");
    }
    RadialProfile p;
    p.state = state;
    p.r_max = std::max(2.0 * std::sqrt(std::max(state.energy, 0.0)) + 10.0,
                       state.r0 + 10.0);

    const int l = state.label.l;
    const double m = state.m;
    const double norm2 = quadrature::integrate(
        [l, m](double r) {
            const double v = raw_radial(l, m, r);
            return v * v * r;
        },
        state.r0, p.r_max, config.panel_tol);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw ComputeError("wavefunction: normalization integral failed (l="
                           + std::to_string(l) + ", r0=" + std::to_string(state.r0) + ")");
    }
    p.norm_constant = 1.0 / std::sqrt(norm2);

    p.r_grid.resize(config.samples);
    p.R_values.resize(config.samples);
    p.rho_values.resize(config.samples);
    const double dr = (p.r_max - state.r0) / (config.samples - 1);
    for (int i = 0; i < config.samples; ++i) {
        p.r_grid[i] = state.r0 + i * dr;
    }
    p.r_grid.back() = p.r_max;

    // fix the gauge: first nonzero sampled value positive
    for (int i = 1; i < config.samples; ++i) {
        const double v = p.norm_constant * raw_radial(l, m, p.r_grid[i]);
        if (v != 0.0) {
            if (v < 0.0) p.norm_constant = -p.norm_constant;
            break;
        }
    }

    p.R_values[0] = 0.0; // Dirichlet wall, exact by construction
    p.rho_values[0] = 0.0;
    for (int i = 1; i < config.samples; ++i) {
        const double v = p.norm_constant * raw_radial(l, m, p.r_grid[i]);
        p.R_values[i] = v;
        p.rho_values[i] = v * v;
    }

    for (int i = 1; i + 1 < config.samples; ++i) {
        if (p.R_values[i] == 0.0) {
            p.nodes.push_back(p.r_grid[i]); // sample sits exactly on a zero
        } else if (p.R_values[i + 1] != 0.0
                   && (p.R_values[i] < 0.0) != (p.R_values[i + 1] < 0.0)) {
            p.nodes.push_back(refine_node(p, p.r_grid[i], p.r_grid[i + 1]));
        }
    }
    p.node_count = static_cast<int>(p.nodes.size());
    return p;
}

double density_overlap(const RadialProfile& p, const RadialProfile& q) {
    const double lo = std::max(p.state.r0, q.state.r0);
    const double hi = std::max(p.r_max, q.r_max);
    return quadrature::integrate(
        [&p, &q](double r) { return p.radial(r) * q.radial(r) * r; }, lo, hi);
}

} // namespace hc2d::wavefunction
