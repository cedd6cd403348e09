#pragma once

#include "hc2d/errors.hpp"

#include <cmath>
#include <utility>

namespace hc2d::quadrature {

namespace detail {

struct Gl16Rule {
    double node[8]; // positive abscissae on (-1, 1), symmetric rule
    double weight[8];
    Gl16Rule();
};

const Gl16Rule& gl16();

} // namespace detail

template <class F>
double gl16_panel(F& f, double a, double b) {
    const auto& rule = detail::gl16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * rule.node[i];
        sum += rule.weight[i] * (f(mid - dx) + f(mid + dx));
    }
    return half * sum;
}

namespace detail {

template <class F>
double adapt(F& f, double a, double b, double coarse, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl16_panel(f, a, mid);
    const double right = gl16_panel(f, mid, b);
    const double refined = left + right;
    if (std::fabs(refined - coarse) <= tol) {
        return refined;
    }
    if (depth >= 30) {
        throw ComputeError("quadrature: panel recursion depth exceeded");
    }
    return adapt(f, a, mid, left, 0.5 * tol, depth + 1)
         + adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

} // namespace detail

// Adaptive Gauss-Legendre: 16-point panels, recursive bisection until the
// two-half refinement of each panel moves it by less than the panel
// tolerance (scaled by the integral's own magnitude, floored at 1).
template <class F>
double integrate(F&& f, double a, double b, double panel_tol = 1e-12) {
    if (!(b > a)) return 0.0;
    auto& fn = f;
    // Seed panels of bounded width so the first error estimates are honest.
    const int seeds = std::max(1, static_cast<int>(std::ceil((b - a) / 2.0)));
    const double width = (b - a) / seeds;
    double rough = 0.0;
    for (int i = 0; i < seeds; ++i) {
        rough += std::fabs(gl16_panel(fn, a + i * width, a + (i + 1) * width));
    }
    const double tol = panel_tol * std::max(1.0, rough);
    double total = 0.0;
    for (int i = 0; i < seeds; ++i) {
        const double lo = a + i * width;
        const double hi = a + (i + 1) * width;
        total += detail::adapt(fn, lo, hi, gl16_panel(fn, lo, hi), tol, 0);
    }
    return total;
}

} // namespace hc2d::quadrature
