#pragma once

#include "hc2d/errors.hpp"

#include <vector>

namespace hc2d {

// A level family: angular momentum l and the 1-based index o of the root m
// in ascending order. Families never merge or cross within one l.
struct QuantumLabel {
    int l;
    int order;

    friend bool operator==(const QuantumLabel& a, const QuantumLabel& b) {
        return a.l == b.l && a.order == b.order;
    }
    friend bool operator<(const QuantumLabel& a, const QuantumLabel& b) {
        return a.l != b.l ? a.l < b.l : a.order < b.order;
    }
};

// A solved level. energy = l + 1 + 2*m by construction.
struct EigenState {
    QuantumLabel label;
    double r0;
    double m;
    double energy;
};

namespace eigensolver {

struct SolverOptions {
    double m_max = 30.0;     // scan ceiling in m
    double scan_step = 0.02; // bracketing grid step
    double m_tol = 1e-12;    // bracket width at which refinement stops
};

// Value whose roots in m are the eigenlevels: U(-m, l+1, r0^2/2).
double boundary_function(int l, double r0, double m);

// The `count` smallest positive roots of the boundary function, strictly
// increasing. Throws ComputeError if the scan ceiling is reached first
// (raise SolverOptions::m_max to search further).
std::vector<double> solve_m_values(int l, double r0, int count,
                                   const SolverOptions& options = {});

// Solve one labelled level: m is the order-th root, energy = l + 1 + 2m.
EigenState solve_state(const QuantumLabel& label, double r0,
                       const SolverOptions& options = {});

// Zero-range limit of the energy: l + 1 + 2*(order - 1).
double free_energy(const QuantumLabel& label);

} // namespace eigensolver

} // namespace hc2d
