#pragma once

#include "hc2d/errors.hpp"

#include <vector>

namespace hc2d::oracle {

struct OracleConfig {
    double h = 1e-3;        // grid spacing
    double r_max = 0.0;     // domain cutoff; 0 = auto from the free-spectrum guess
    int n_eigen = 1;        // number of eigenvalues requested
    double tolerance = 1e-4; // convergence demand on the h vs h/2 comparison
};

struct FdEigenvalue {
    double energy;
    double est_abs_error;
};

// Independent check on the hypergeometric pipeline: discretize the radial
// equation in the substituted form u = R * sqrt(r),
//   -u'' + [(l^2 - 1/4)/r^2 + r^2/4] u = E u,  u(r0) = u(r_max) = 0,
// as a symmetric tridiagonal system (central second difference), solve the
// lowest eigenvalues at spacings h and h/2, and Richardson-extrapolate the
// O(h^2) error away. est_abs_error is the |E_h - E_{h/2}|/3 step estimate.
std::vector<FdEigenvalue> fd_eigenvalues(int l, double r0, const OracleConfig& config = {});

} // namespace hc2d::oracle
