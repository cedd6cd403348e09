#pragma once

#include <stdexcept>
#include <string>

namespace hc2d {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: bad parameter ranges, poles, z <= 0, malformed config.
// The CLI maps this to exit code 2.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A computation that could not be completed to tolerance: series cap hit,
// root scan exhausted, quadrature depth exceeded, oracle non-convergence.
// The CLI maps this to exit code 3.
struct ComputeError : Error {
    explicit ComputeError(const std::string& msg) : Error(msg) {}
};

} // namespace hc2d
