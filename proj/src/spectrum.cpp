#include "hc2d/spectrum.hpp"
#include "hc2d/observables.hpp"
#include "hc2d/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace hc2d::spectrum {

namespace {

using detail::parallel_for;

// order -> column index for each l, so one root scan serves all orders of
// that l at a given r0.
struct LGroup {
    int l;
    int max_order;
    std::vector<std::pair<int, int>> order_to_column; // (order, column)
};

std::vector<LGroup> group_by_l(const std::vector<QuantumLabel>& labels) {
    std::map<int, LGroup> groups;
    for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
        const auto& lab = labels[j];
        if (lab.l < 0 || lab.order < 1) {
            throw DomainError("spectrum: invalid label (l=" + std::to_string(lab.l)
                              + ", order=" + std::to_string(lab.order) + ")");
        }
        auto& g = groups[lab.l];
        g.l = lab.l;
        g.max_order = std::max(g.max_order, lab.order);
        g.order_to_column.emplace_back(lab.order, j);
    }
    std::vector<LGroup> out;
    out.reserve(groups.size());
    for (auto& [l, g] : groups) out.push_back(std::move(g));
    return out;
}

void check_grid(const std::vector<double>& r0_grid) {
    if (r0_grid.empty()) {
        throw DomainError("spectrum: empty r0 grid");
    }
    for (std::size_t i = 0; i < r0_grid.size(); ++i) {
        if (!(r0_grid[i] > 0.0)) {
            throw DomainError("spectrum: r0 grid values must be positive");
        }
        if (i > 0 && !(r0_grid[i] > r0_grid[i - 1])) {
            throw DomainError("spectrum: r0 grid must be strictly increasing");
        }
    }
}

} // namespace

std::vector<QuantumLabel> default_labels(int l_max, int orders) {
    if (l_max < 0 || orders < 1) {
        throw DomainError("spectrum: need l_max >= 0 and orders >= 1");
    }
    std::vector<QuantumLabel> labels;
    labels.reserve((l_max + 1) * orders);
    for (int l = 0; l <= l_max; ++l) {
        for (int o = 1; o <= orders; ++o) {
            labels.push_back({l, o});
        }
    }
    return labels;
}

std::vector<double> linspace_grid(double lo, double hi, int steps) {
    if (steps < 1) {
        throw DomainError("spectrum: steps must be >= 1");
    }
    if (steps == 1) return {lo};
    if (!(hi > lo)) {
        throw DomainError("spectrum: grid needs hi > lo");
    }
    std::vector<double> grid(steps);
    const double d = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) grid[i] = lo + i * d;
    grid.back() = hi;
    return grid;
}

SpectrumTable scan(const std::vector<QuantumLabel>& labels,
                   const std::vector<double>& r0_grid, int threads) {
    check_grid(r0_grid);
    if (labels.empty()) {
        throw DomainError("spectrum: empty label list");
    }
    if (threads < 1) {
        throw DomainError("spectrum: threads must be >= 1");
    }
    SpectrumTable table;
    table.r0_grid = r0_grid;
    table.levels = labels;
    table.energies.assign(r0_grid.size(), std::vector<double>(labels.size(), 0.0));
    table.m_values.assign(r0_grid.size(), std::vector<double>(labels.size(), 0.0));

    const auto groups = group_by_l(labels);
    const int n_r0 = static_cast<int>(r0_grid.size());
    const int n_cells = static_cast<int>(groups.size()) * n_r0;
    parallel_for(n_cells, threads, [&](int cell) {
        const auto& group = groups[cell / n_r0];
        const int i = cell % n_r0;
        const double r0 = r0_grid[i];
        std::vector<double> roots;
        try {
            roots = eigensolver::solve_m_values(group.l, r0, group.max_order);
        } catch (const Error& e) {
            throw ComputeError("spectrum: solve failed at l=" + std::to_string(group.l)
                               + ", r0=" + std::to_string(r0) + ": " + e.what());
        }
        for (const auto& [order, column] : group.order_to_column) {
            const double m = roots[order - 1];
            table.m_values[i][column] = m;
            table.energies[i][column] = group.l + 1 + 2.0 * m;
        }
    });
    return table;
}

std::vector<CrossingEvent> detect_crossings(const SpectrumTable& table) {
    const int n_levels = static_cast<int>(table.levels.size());
    const int n_r0 = static_cast<int>(table.r0_grid.size());
    std::vector<CrossingEvent> events;

    for (int a = 0; a < n_levels; ++a) {
        for (int b = a + 1; b < n_levels; ++b) {
            // a fixed (a, b) orientation keeps refinement symmetric in the pair
            const QuantumLabel la = std::min(table.levels[a], table.levels[b]);
            const QuantumLabel lb = std::max(table.levels[a], table.levels[b]);
            if (la == lb) continue;
            const int ia = table.levels[a] == la ? a : b;
            const int ib = ia == a ? b : a;
            for (int i = 0; i + 1 < n_r0; ++i) {
                const double d0 = table.energies[i][ia] - table.energies[i][ib];
                const double d1 = table.energies[i + 1][ia] - table.energies[i + 1][ib];
                double lo = table.r0_grid[i];
                double hi = table.r0_grid[i + 1];
                if (d0 == 0.0) {
                    if (i == 0) {
                        events.push_back({la, lb, lo,
                                          table.energies[i][ia], 0.0});
                    }
                    continue; // interior exact hits belong to the previous cell
                }
                if (d1 == 0.0) {
                    events.push_back({la, lb, hi, table.energies[i + 1][ia], 0.0});
                    continue;
                }
                if ((d0 < 0.0) == (d1 < 0.0)) continue;
                double dlo = d0;
                while (hi - lo > 1e-9) {
                    const double mid = 0.5 * (lo + hi);
                    const double dm = eigensolver::solve_state(la, mid).energy
                                    - eigensolver::solve_state(lb, mid).energy;
                    if (dm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((dlo < 0.0) != (dm < 0.0)) {
                        hi = mid;
                    } else {
                        lo = mid;
                        dlo = dm;
                    }
                }
                const double r0_star = 0.5 * (lo + hi);
                const double ea = eigensolver::solve_state(la, r0_star).energy;
                const double eb = eigensolver::solve_state(lb, r0_star).energy;
                events.push_back({la, lb, r0_star, 0.5 * (ea + eb), hi - lo});
            }
        }
    }
    std::sort(events.begin(), events.end(),
              [](const CrossingEvent& x, const CrossingEvent& y) {
                  if (x.r0_star != y.r0_star) return x.r0_star < y.r0_star;
                  if (!(x.label_a == y.label_a)) return x.label_a < y.label_a;
                  return x.label_b < y.label_b;
              });
    return events;
}

std::vector<RankedQfiPoint> ordered_level_qfi(
    int n, const std::vector<double>& r0_grid,
    const std::vector<QuantumLabel>& labels, int threads) {
    check_grid(r0_grid);
    if (n < 1 || n > static_cast<int>(labels.size())) {
        throw DomainError("spectrum: rank n must be in [1, label count]");
    }
    const auto table = scan(labels, r0_grid, threads);

    std::vector<RankedQfiPoint> out(r0_grid.size());
    parallel_for(static_cast<int>(r0_grid.size()), threads, [&](int i) {
        const auto& row = table.energies[i];
        std::vector<int> rank(labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) rank[j] = static_cast<int>(j);
        std::stable_sort(rank.begin(), rank.end(),
                         [&row](int x, int y) { return row[x] < row[y]; });
        const QuantumLabel target = labels[rank[n - 1]];
        const auto qfi = observables::fisher_parameter_refined(target, r0_grid[i]);
        out[i] = {r0_grid[i], target, qfi.value};
    });
    return out;
}

} // namespace hc2d::spectrum
