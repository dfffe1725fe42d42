#pragma once

#include <stdexcept>
#include <string>

namespace holreg {

/// Raised when a seeded point search runs out of trial budget before
/// producing the requested number of points.
struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a bracket of two basis elements cannot be expanded inside the
/// span of the basis.
struct NotClosed : std::runtime_error {
    NotClosed(std::size_t i, std::size_t j)
        : std::runtime_error("bracket of basis elements " + std::to_string(i) + " and " +
                             std::to_string(j) + " leaves the span"),
          lhs(i),
          rhs(j) {}
    std::size_t lhs;
    std::size_t rhs;
};

/// Raised when a map that must have polynomial (p, q) data produces a
/// non-polynomial entry.
struct NonPolynomial : std::runtime_error {
    NonPolynomial(std::string entry_label, std::string detail)
        : std::runtime_error("non-polynomial entry " + entry_label + ": " + detail),
          entry(std::move(entry_label)) {}
    std::string entry;
};

}  // namespace holreg
