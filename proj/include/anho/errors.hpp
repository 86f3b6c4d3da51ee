#pragma once

#include <stdexcept>
#include <string>

namespace anho {

/// Thrown when an iterative solver fails to reach its residual target.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a quadrature routine cannot reach the requested accuracy.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] inline void contract_fail(const char* cond, const char* msg) {
    throw std::invalid_argument(std::string("contract violation: ") + msg + " (" + cond + ")");
}
} // namespace detail

} // namespace anho

#define ANHO_REQUIRE(cond, msg) \
    do { if (!(cond)) ::anho::detail::contract_fail(#cond, msg); } while (0)
