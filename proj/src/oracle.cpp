#include "hc2d/oracle.hpp"

#include "hc2d/io.hpp"

#include <cmath>
#include <string>
#include <vector>

extern "C" {
// LAPACK: selected eigenvalues of a symmetric tridiagonal matrix by
// Sturm-count bisection.
void dstebz_(const char* range, const char* order, const int* n,
             const double* vl, const double* vu, const int* il, const int* iu,
             const double* abstol, const double* d, const double* e,
             int* m, int* nsplit, double* w, int* iblock, int* isplit,
             double* work, int* iwork, int* info);
}

namespace hc2d::oracle {

namespace {

// Lowest n_eigen eigenvalues of the Dirichlet discretization with n interior
// points on (r0, r_max), spacing h.
std::vector<double> tridiag_lowest(int l, double r0, double h, int n, int n_eigen) {
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    const double inv_h2 = 1.0 / (h * h);
    const double centrifugal = l * l - 0.25;
    for (int i = 0; i < n; ++i) {
        const double r = r0 + (i + 1) * h;
        diag[i] = 2.0 * inv_h2 + centrifugal / (r * r) + 0.25 * r * r;
    }
    for (int i = 0; i + 1 < n; ++i) off[i] = -inv_h2;

    const char range = 'I';
    const char order = 'E';
    const double vl = 0.0, vu = 0.0;
    const int il = 1;
    const int iu = n_eigen;
    const double abstol = 1e-11;
    int found = 0, nsplit = 0, info = 0;
    std::vector<double> w(n);
    std::vector<int> iblock(n), isplit(n), iwork(3 * n);
    std::vector<double> work(4 * n);
    dstebz_(&range, &order, &n, &vl, &vu, &il, &iu, &abstol, diag.data(), off.data(),
            &found, &nsplit, w.data(), iblock.data(), isplit.data(),
            work.data(), iwork.data(), &info);
    if (info != 0 || found < n_eigen) {
        throw ComputeError("oracle: dstebz failed (info=" + std::to_string(info)
                           + ", found=" + std::to_string(found) + ")");
    }
    w.resize(n_eigen);
    return w;
}

} // namespace

std::vector<FdEigenvalue> fd_eigenvalues(int l, double r0, const OracleConfig& config) {
    if (l < 0) {
        throw DomainError("oracle: l must be non-negative, got " + std::to_string(l));
    }
    if (!(r0 > 0.0)) {
        throw DomainError("oracle: r0 must be positive, got " + std::to_string(r0));
    }
    if (!(config.h > 0.0)) {
        throw DomainError("oracle: h must be positive");
    }
    if (config.n_eigen < 1) {
        throw DomainError("oracle: n_eigen must be >= 1");
    }
    double r_max = config.r_max;
    if (r_max == 0.0) {
        // highest requested level in the zero-range limit, with slack for the
        // hard-core upward shift
        const double e_guess = l + 1 + 2.0 * config.n_eigen;
        r_max = std::max(2.0 * std::sqrt(e_guess) + 10.0, r0 + 10.0);
    }
    if (!(r_max > r0 + 5.0)) {
        throw DomainError("oracle: r_max must exceed r0 + 5");
    }

    const int steps = std::max(8, static_cast<int>(std::llround((r_max - r0) / config.h)));
    const double h = (r_max - r0) / steps;
    const auto coarse = tridiag_lowest(l, r0, h, steps - 1, config.n_eigen);
    const auto fine = tridiag_lowest(l, r0, 0.5 * h, 2 * steps - 1, config.n_eigen);

    std::vector<FdEigenvalue> out(config.n_eigen);
    for (int i = 0; i < config.n_eigen; ++i) {
        const double step_diff = std::fabs(coarse[i] - fine[i]);
        if (step_diff > 10.0 * config.tolerance) {
            throw ComputeError("oracle: h vs h/2 eigenvalues differ by "
                               + io::format_double(step_diff) + " (level "
                               + std::to_string(i + 1) + ", l=" + std::to_string(l)
                               + ", r0=" + io::format_double(r0) + "); refine h");
        }
        out[i].energy = (4.0 * fine[i] - coarse[i]) / 3.0;
        out[i].est_abs_error = step_diff / 3.0;
    }
    return out;
}

} // namespace hc2d::oracle
