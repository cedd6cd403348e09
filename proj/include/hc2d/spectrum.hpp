#pragma once

#include "hc2d/eigensolver.hpp"

#include <utility>
#include <vector>

namespace hc2d::spectrum {

// Energies of a set of level families over an r0 grid.
// energies[i][j] belongs to r0_grid[i] and levels[j]; same shape for m_values.
struct SpectrumTable {
    std::vector<double> r0_grid;
    std::vector<QuantumLabel> levels;
    std::vector<std::vector<double>> energies;
    std::vector<std::vector<double>> m_values;
};

// A refined crossing between two level families. Crossings only happen
// between families of different order (equal-order curves never meet).
struct CrossingEvent {
    QuantumLabel label_a;
    QuantumLabel label_b;
    double r0_star;
    double energy_star;
    double bracket_width;
};

// All (l <= l_max, order <= orders) labels, sorted by (l, order).
std::vector<QuantumLabel> default_labels(int l_max, int orders);

// Evenly spaced grid of `steps` points on [lo, hi] (a single point sits at lo).
std::vector<double> linspace_grid(double lo, double hi, int steps);

// Solve every (label, r0) cell. Cells are independent; with threads > 1 they
// are sharded deterministically, and the assembled table is identical to the
// serial result bit for bit.
SpectrumTable scan(const std::vector<QuantumLabel>& labels,
                   const std::vector<double>& r0_grid, int threads = 1);

// Every sign change of E_a - E_b between adjacent grid points, refined by
// bisection (each probe a fresh eigensolve) until the r0 bracket is below
// 1e-8; events sorted by r0_star.
std::vector<CrossingEvent> detect_crossings(const SpectrumTable& table);

// One point of the ranked-level QFI curve: which family holds the rank at
// this radius, and its Fisher information with respect to r0.
struct RankedQfiPoint {
    double r0;
    QuantumLabel label;
    double value;
};

// Fisher information (with respect to r0) of the n-th lowest level at each
// grid point, 1-based rank by energy. The identity of the ranked level can
// change across a crossing, producing a jump in the returned curve.
std::vector<RankedQfiPoint> ordered_level_qfi(
    int n, const std::vector<double>& r0_grid,
    const std::vector<QuantumLabel>& labels, int threads = 1);

} // namespace hc2d::spectrum
