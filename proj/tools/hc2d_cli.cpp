// Command line front end. Every subcommand writes one CSV or JSON document
// (and optionally an SVG chart) and prints the output path on stdout.
// Exit codes: 0 success, 2 bad input, 3 computation failure.
#include <CLI11.hpp>
#include <json.hpp>

#include "hc2d/eigensolver.hpp"
#include "hc2d/errors.hpp"
#include "hc2d/io.hpp"
#include "hc2d/observables.hpp"
#include "hc2d/oracle.hpp"
#include "hc2d/parallel.hpp"
#include "hc2d/spectrum.hpp"
#include "hc2d/version.hpp"
#include "hc2d/wavefunction.hpp"

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace hc2d;

struct GridOptions {
    int l_max = 8;
    int orders = 4;
    double r0_min = 0.05;
    double r0_max = 8.0;
    int r0_steps = 200;
    int threads = 1;
};

struct OutputOptions {
    std::string format = "csv";
    std::string out;
    std::string plot;
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--l-max", g.l_max, "Largest angular momentum")
        ->capture_default_str();
    cmd->add_option("--orders", g.orders, "Radial orders per angular momentum")
        ->capture_default_str();
    cmd->add_option("--r0-min", g.r0_min, "Smallest core diameter")
        ->capture_default_str();
    cmd->add_option("--r0-max", g.r0_max, "Largest core diameter")
        ->capture_default_str();
    cmd->add_option("--r0-steps", g.r0_steps, "Number of grid points")
        ->capture_default_str();
    cmd->add_option("--threads", g.threads, "Worker threads")
        ->capture_default_str();
}

void add_output_options(CLI::App* cmd, OutputOptions& o, bool with_plot) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (default <subcommand>.<format>)");
    if (with_plot) {
        cmd->add_option("--plot", o.plot, "Also write an SVG chart to this path");
    }
}

std::string resolve_out(const OutputOptions& o, const std::string& stem) {
    if (!o.out.empty()) return o.out;
    return stem + (o.format == "csv" ? ".csv" : ".json");
}

void grid_meta(json& meta, const GridOptions& g) {
    meta["l_max"] = g.l_max;
    meta["orders"] = g.orders;
    meta["r0_min"] = g.r0_min;
    meta["r0_max"] = g.r0_max;
    meta["r0_steps"] = g.r0_steps;
    meta["threads"] = g.threads;
}

void emit(const OutputOptions& o, const std::string& path, json meta,
          const io::Table& table) {
    meta["version"] = version_string;
    meta["format"] = o.format;
    meta["out"] = path;
    if (o.format == "csv") {
        io::write_csv(path, table);
    } else {
        io::write_json(path, meta.dump(), table);
    }
    std::cout << "wrote " << path << " (" << table.rows.size() << " rows)\n";
}

void run_spectrum(const GridOptions& g, const OutputOptions& o) {
    const auto labels = spectrum::default_labels(g.l_max, g.orders);
    const auto grid = spectrum::linspace_grid(g.r0_min, g.r0_max, g.r0_steps);
    const auto table = spectrum::scan(labels, grid, g.threads);

    io::Table t;
    t.columns = {"r0", "l", "order", "m", "energy"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            t.rows.push_back({io::format_double(grid[i]),
                              io::format_int(labels[j].l),
                              io::format_int(labels[j].order),
                              io::format_double(table.m_values[i][j]),
                              io::format_double(table.energies[i][j])});
        }
    }
    json meta{{"command", "spectrum"}};
    grid_meta(meta, g);
    emit(o, resolve_out(o, "spectrum"), meta, t);

    if (!o.plot.empty()) {
        std::vector<io::PlotSeries> series(labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) {
            series[j].name = "l=" + std::to_string(labels[j].l)
                           + " o=" + std::to_string(labels[j].order);
            series[j].x = grid;
            series[j].y.resize(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                series[j].y[i] = table.energies[i][j];
            }
        }
        io::write_svg_plot(o.plot, "Energy levels", "core diameter r0",
                           "energy", series);
        std::cout << "wrote " << o.plot << "\n";
    }
}

void run_crossings(const GridOptions& g, const OutputOptions& o) {
    const auto labels = spectrum::default_labels(g.l_max, g.orders);
    const auto grid = spectrum::linspace_grid(g.r0_min, g.r0_max, g.r0_steps);
    const auto events = spectrum::detect_crossings(spectrum::scan(labels, grid, g.threads));

    io::Table t;
    t.columns = {"l_a", "order_a", "l_b", "order_b", "r0_star", "energy_star"};
    for (const auto& e : events) {
        t.rows.push_back({io::format_int(e.label_a.l), io::format_int(e.label_a.order),
                          io::format_int(e.label_b.l), io::format_int(e.label_b.order),
                          io::format_double(e.r0_star), io::format_double(e.energy_star)});
    }
    json meta{{"command", "crossings"}};
    grid_meta(meta, g);
    emit(o, resolve_out(o, "crossings"), meta, t);
}

void run_observables(const GridOptions& g, const OutputOptions& o) {
    const auto labels = spectrum::default_labels(g.l_max, g.orders);
    const auto grid = spectrum::linspace_grid(g.r0_min, g.r0_max, g.r0_steps);

    struct Row {
        EigenState state;
        observables::EnergySplit split;
        double fisher_rho;
        double fisher_r0;
    };
    std::vector<Row> rows(grid.size() * labels.size());
    detail::parallel_for(static_cast<int>(rows.size()), g.threads, [&](int k) {
        const std::size_t i = static_cast<std::size_t>(k) / labels.size();
        const std::size_t j = static_cast<std::size_t>(k) % labels.size();
        const auto state = eigensolver::solve_state(labels[j], grid[i]);
        const auto profile = wavefunction::build_profile(state);
        rows[k].state = state;
        rows[k].split = observables::energy_split(profile);
        rows[k].fisher_rho = observables::fisher_density(profile).value;
        rows[k].fisher_r0 =
            observables::fisher_parameter_refined(labels[j], grid[i]).value;
    });

    io::Table t;
    t.columns = {"r0", "l", "order", "m", "energy",
                 "kinetic", "potential", "fisher_rho", "fisher_r0"};
    for (const auto& row : rows) {
        t.rows.push_back({io::format_double(row.state.r0),
                          io::format_int(row.state.label.l),
                          io::format_int(row.state.label.order),
                          io::format_double(row.state.m),
                          io::format_double(row.state.energy),
                          io::format_double(row.split.kinetic),
                          io::format_double(row.split.potential),
                          io::format_double(row.fisher_rho),
                          io::format_double(row.fisher_r0)});
    }
    json meta{{"command", "observables"}};
    grid_meta(meta, g);
    emit(o, resolve_out(o, "observables"), meta, t);

    if (!o.plot.empty()) {
        std::vector<io::PlotSeries> series(labels.size());
        for (std::size_t j = 0; j < labels.size(); ++j) {
            series[j].name = "l=" + std::to_string(labels[j].l)
                           + " o=" + std::to_string(labels[j].order);
            series[j].x = grid;
            series[j].y.resize(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                series[j].y[i] = rows[i * labels.size() + j].fisher_rho;
            }
        }
        io::write_svg_plot(o.plot, "Density Fisher information",
                           "core diameter r0", "F_rho", series);
        std::cout << "wrote " << o.plot << "\n";
    }
}

void run_qfi(const GridOptions& g, const OutputOptions& o, int rank) {
    const auto labels = spectrum::default_labels(g.l_max, g.orders);
    const auto grid = spectrum::linspace_grid(g.r0_min, g.r0_max, g.r0_steps);
    const auto curve = spectrum::ordered_level_qfi(rank, grid, labels, g.threads);

    io::Table t;
    t.columns = {"r0", "rank", "l", "order", "fisher_r0"};
    for (const auto& p : curve) {
        t.rows.push_back({io::format_double(p.r0), io::format_int(rank),
                          io::format_int(p.label.l), io::format_int(p.label.order),
                          io::format_double(p.value)});
    }
    json meta{{"command", "qfi"}, {"level_rank", rank}};
    grid_meta(meta, g);
    emit(o, resolve_out(o, "qfi"), meta, t);

    if (!o.plot.empty()) {
        io::PlotSeries s;
        s.name = "rank " + std::to_string(rank);
        for (const auto& p : curve) {
            s.x.push_back(p.r0);
            s.y.push_back(p.value);
        }
        io::write_svg_plot(o.plot, "QFI of the ranked level",
                           "core diameter r0", "F_r0", {s});
        std::cout << "wrote " << o.plot << "\n";
    }
}

void run_wavefunction(int l, int order, double r0, int samples,
                      const OutputOptions& o) {
    const auto state = eigensolver::solve_state({l, order}, r0);
    wavefunction::GridConfig config;
    config.samples = samples;
    const auto profile = wavefunction::build_profile(state, config);

    io::Table t;
    t.columns = {"r", "R", "rho"};
    for (std::size_t i = 0; i < profile.r_grid.size(); ++i) {
        t.rows.push_back({io::format_double(profile.r_grid[i]),
                          io::format_double(profile.R_values[i]),
                          io::format_double(profile.rho_values[i])});
    }
    json meta{{"command", "wavefunction"}, {"l", l},       {"order", order},
              {"r0", r0},                  {"m", state.m}, {"energy", state.energy},
              {"samples", samples},        {"node_count", profile.node_count}};
    emit(o, resolve_out(o, "wavefunction"), meta, t);

    if (!o.plot.empty()) {
        io::PlotSeries radial{"R(r)", profile.r_grid, profile.R_values};
        io::PlotSeries density{"rho(r)", profile.r_grid, profile.rho_values};
        io::write_svg_plot(o.plot, "Radial profile", "r", "amplitude",
                           {radial, density});
        std::cout << "wrote " << o.plot << "\n";
    }
}

void run_validate(int l, int orders, double r0, double h, double tolerance,
                  const OutputOptions& o) {
    oracle::OracleConfig config;
    config.h = h;
    config.n_eigen = orders;
    // config.tolerance stays at its default: it gates the oracle's internal
    // h vs h/2 consistency, not the cross-check threshold requested here
    const auto fd = oracle::fd_eigenvalues(l, r0, config);

    io::Table t;
    t.columns = {"l", "r0", "order", "E_hyper", "E_fd", "abs_diff"};
    double worst = 0.0;
    for (int order = 1; order <= orders; ++order) {
        const auto state = eigensolver::solve_state({l, order}, r0);
        const double e_fd = fd[order - 1].energy;
        const double diff = std::fabs(state.energy - e_fd);
        worst = std::max(worst, diff);
        t.rows.push_back({io::format_int(l), io::format_double(r0),
                          io::format_int(order), io::format_double(state.energy),
                          io::format_double(e_fd), io::format_double(diff)});
    }
    json meta{{"command", "validate"}, {"l", l}, {"orders", orders}, {"r0", r0},
              {"step", h}, {"tolerance", tolerance}, {"max_abs_diff", worst}};
    emit(o, resolve_out(o, "validate"), meta, t);

    if (worst >= tolerance) {
        throw ComputeError("validate: spectra disagree, max |E_hyper - E_fd| = "
                           + io::format_double(worst) + " at l=" + std::to_string(l)
                           + ", r0=" + io::format_double(r0));
    }
    std::cout << "validated " << orders << " level(s), max |E_hyper - E_fd| = "
              << io::format_double(worst) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative motion of two hard-core bosons in a 2d harmonic trap"};
    app.set_version_flag("--version", std::string(version_string));
    app.require_subcommand(1);

    GridOptions grid;
    OutputOptions out;
    int level_rank = 5;
    int wf_l = 0;
    int wf_order = 1;
    double wf_r0 = 1.0;
    int wf_samples = 4000;
    int val_l = 0;
    int val_orders = 2;
    double val_r0 = 1.0;
    double val_h = 1e-3;
    double val_tolerance = 1e-4;

    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "Energy levels over a grid of core diameters");
    add_grid_options(spectrum_cmd, grid);
    add_output_options(spectrum_cmd, out, true);
    spectrum_cmd->callback([&] { run_spectrum(grid, out); });

    auto* crossings_cmd = app.add_subcommand(
        "crossings", "Level crossings refined to high precision");
    add_grid_options(crossings_cmd, grid);
    add_output_options(crossings_cmd, out, false);
    crossings_cmd->callback([&] { run_crossings(grid, out); });

    auto* observables_cmd = app.add_subcommand(
        "observables", "Energy split and Fisher information per level");
    add_grid_options(observables_cmd, grid);
    add_output_options(observables_cmd, out, true);
    observables_cmd->callback([&] { run_observables(grid, out); });

    auto* qfi_cmd = app.add_subcommand(
        "qfi", "QFI of the n-th lowest level across the grid");
    add_grid_options(qfi_cmd, grid);
    add_output_options(qfi_cmd, out, true);
    qfi_cmd->add_option("--level-rank", level_rank, "Energy rank (1 = ground)")
        ->capture_default_str();
    qfi_cmd->callback([&] { run_qfi(grid, out, level_rank); });

    auto* wavefunction_cmd = app.add_subcommand(
        "wavefunction", "Radial profile of a single level");
    wavefunction_cmd->add_option("--l", wf_l, "Angular momentum")
        ->capture_default_str();
    wavefunction_cmd->add_option("--order", wf_order, "Radial order (1 = lowest)")
        ->capture_default_str();
    wavefunction_cmd->add_option("--r0", wf_r0, "Core diameter")->required();
    wavefunction_cmd->add_option("--samples", wf_samples, "Grid samples")
        ->capture_default_str();
    add_output_options(wavefunction_cmd, out, true);
    wavefunction_cmd->callback(
        [&] { run_wavefunction(wf_l, wf_order, wf_r0, wf_samples, out); });

    auto* validate_cmd = app.add_subcommand(
        "validate", "Cross-check energies against a finite-difference solver");
    validate_cmd->add_option("--l", val_l, "Angular momentum")
        ->capture_default_str();
    validate_cmd->add_option("--orders", val_orders, "Levels to compare")
        ->capture_default_str();
    validate_cmd->add_option("--r0", val_r0, "Core diameter")->required();
    validate_cmd->add_option("--step", val_h, "Finite-difference grid spacing")
        ->capture_default_str();
    validate_cmd->add_option("--tolerance", val_tolerance, "Acceptable |E_hyper - E_fd|")
        ->capture_default_str();
    add_output_options(validate_cmd, out, false);
    validate_cmd->callback(
        [&] { run_validate(val_l, val_orders, val_r0, val_h, val_tolerance, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
