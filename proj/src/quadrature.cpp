#include "hc2d/quadrature.hpp"

namespace hc2d::quadrature::detail {

// Nodes and weights of the 16-point Gauss-Legendre rule, computed once by
// Newton iteration on P_16. Converges to full double precision from the
// Chebyshev-like initial guesses.
Gl16Rule::Gl16Rule() {
    constexpr int n = 16;
    for (int i = 0; i < 8; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) {
                // one clean-up step keeps the node at full precision
                p0 = 1.0; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / dp;
                break;
            }
        }
        node[i] = x;
        weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

const Gl16Rule& gl16() {
    static const Gl16Rule rule;
    return rule;
}

} // namespace hc2d::quadrature::detail
