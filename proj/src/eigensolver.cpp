#include "hc2d/eigensolver.hpp"
#include "hc2d/specfun.hpp"

#include <cmath>
#include <string>

namespace hc2d::eigensolver {

namespace {

void check_inputs(int l, double r0) {
    if (l < 0) {
        throw DomainError("eigensolver: l must be non-negative, got " + std::to_string(l));
    }
    if (!(r0 > 0.0)) {
        throw DomainError("eigensolver: r0 must be positive, got " + std::to_string(r0));
    }
}

// Bracketing secant/bisection hybrid. The bracket [lo, hi] always holds a
// sign change; secant proposals outside the shrunken bracket fall back to
// bisection, so convergence to m_tol is guaranteed.
double refine_root(int l, double r0, double lo, double hi, double flo, double fhi,
                   double m_tol) {
    for (int iter = 0; iter < 260 && hi - lo > m_tol; ++iter) {
        double mid = lo + (hi - lo) * (flo / (flo - fhi));
        const double margin = 0.01 * (hi - lo);
        if (!(mid > lo + margin) || !(mid < hi - margin) || !std::isfinite(mid)) {
            mid = 0.5 * (lo + hi);
        }
        const double fm = boundary_function(l, r0, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double boundary_function(int l, double r0, double m) {
    check_inputs(l, r0);
    return specfun::kummer_u_intb({-m, l + 1, 0.5 * r0 * r0}).value;
}

std::vector<double> solve_m_values(int l, double r0, int count,
                                   const SolverOptions& options) {
    check_inputs(l, r0);
    if (count < 1) {
        throw DomainError("eigensolver: count must be >= 1, got " + std::to_string(count));
    }

    std::vector<double> roots;
    roots.reserve(count);
    double m_prev = 0.0;
    double f_prev = boundary_function(l, r0, m_prev); // U(0, b, z) = 1
    bool prev_was_root = false;
    while (m_prev < options.m_max && static_cast<int>(roots.size()) < count) {
        const double m_cur = std::min(m_prev + options.scan_step, options.m_max);
        const double f_cur = boundary_function(l, r0, m_cur);
        if (f_cur == 0.0) {
            roots.push_back(m_cur);
            prev_was_root = true;
        } else if (!prev_was_root && (f_prev < 0.0) != (f_cur < 0.0)) {
            roots.push_back(refine_root(l, r0, m_prev, m_cur, f_prev, f_cur, options.m_tol));
            prev_was_root = false;
        } else {
            prev_was_root = false;
        }
        m_prev = m_cur;
        f_prev = f_cur;
    }
    if (static_cast<int>(roots.size()) < count) {
        throw ComputeError("eigensolver: found only " + std::to_string(roots.size())
                           + " of " + std::to_string(count) + " roots below m_max="
                           + std::to_string(options.m_max) + " (l=" + std::to_string(l)
                           + ", r0=" + std::to_string(r0) + "); raise m_max");
    }
    return roots;
}

EigenState solve_state(const QuantumLabel& label, double r0,
                       const SolverOptions& options) {
    if (label.order < 1) {
        throw DomainError("eigensolver: order must be >= 1, got "
                          + std::to_string(label.order));
    }
    const auto roots = solve_m_values(label.l, r0, label.order, options);
    const double m = roots[label.order - 1];
    return {label, r0, m, label.l + 1 + 2.0 * m};
}

double free_energy(const QuantumLabel& label) {
    if (label.l < 0 || label.order < 1) {
        throw DomainError("eigensolver: invalid label (l=" + std::to_string(label.l)
                          + ", order=" + std::to_string(label.order) + ")");
    }
    return label.l + 1 + 2.0 * (label.order - 1);
}

} // namespace hc2d::eigensolver
