#pragma once

#include "hc2d/errors.hpp"

namespace hc2d::specfun {

// Arguments of the confluent hypergeometric functions used here.
// b is restricted to positive integers; z is the (non-negative) radial
// argument. a may be any real and both functions are entire in it.
struct HypergeometricArgs {
    double a;
    int b;
    double z;
};

struct EvalResult {
    double value;
    double est_abs_error;
};

// Gamma function. Throws DomainError at the poles (x = 0, -1, -2, ...).
double gamma(double x);

// Digamma psi(x) = Gamma'(x)/Gamma(x). Same pole set as gamma.
double digamma(double x);

// Kummer M(a, b, z) by power series with term recurrence. For a a
// non-positive integer the series terminates exactly (polynomial case).
// Throws ComputeError if the series does not converge within the term cap.
EvalResult kummer_m(const HypergeometricArgs& args);

// Kummer U(a, b, z) for positive integer b, smooth in a across the
// non-positive integers where it degenerates to Laguerre polynomials:
// U(-N, b, z) = (-1)^N N! L_N^{(b-1)}(z). Requires z > 0.
EvalResult kummer_u_intb(const HypergeometricArgs& args);

namespace detail {

// 1/Gamma(x), finite everywhere (zero at the poles). For x below 0.5 uses
// the reflection 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi with sin(pi x)
// evaluated from the exactly-computed distance to the nearest integer, so
// the result keeps full relative accuracy arbitrarily close to the poles.
double rgamma(double x);

// Digamma continued past the poles by the reflection
// psi(x) = psi(1-x) - pi*cot(pi x), again with the distance to the nearest
// integer computed exactly. Near a pole psi ~ -1/delta, which is the exact
// leading behaviour the logarithmic U series relies on to cancel.
double digamma_reflected(double x);

} // namespace detail

} // namespace hc2d::specfun
