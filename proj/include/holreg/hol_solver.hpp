#pragma once

#include <optional>
#include <vector>

#include "holreg/manifold.hpp"
#include "holreg/vector_field.hpp"

namespace holreg {

/// Ordered basis of a Lie algebra of polynomial vector fields, together with
/// the ground field the span is taken over.
struct LieAlgebraBasis {
    Ground ground;
    int ambient_dim;
    int degree_cap;
    std::vector<PolyVectorField> elements;

    std::size_t dim() const { return elements.size(); }
};

struct SolveOutcome {
    LieAlgebraBasis basis;
    /// Exact pairwise bracket-closure verdict on the computed span.
    bool bracket_closed;
    std::vector<std::pair<std::size_t, std::size_t>> closure_failures;
};

/// All polynomial fields of degree <= degree_cap tangent to m, as a real
/// Lie algebra. The basis is canonical: coefficients in a fixed monomial
/// order, kernel presented in reduced row echelon form, so identical inputs
/// give byte-identical serialized bases.
SolveOutcome solve_hol(const ManifoldSpec& m, int degree_cap);

struct StabilizationOutcome {
    SolveOutcome at_cap;
    std::size_t dim_at_next;
    bool stable;  // dim unchanged when the cap is raised by one
};

/// Re-solves at degree_cap + 1 and compares dimensions. A heuristic
/// saturation probe, not a proof of polynomial-degree boundedness.
StabilizationOutcome solve_hol_stabilized(const ManifoldSpec& m, int degree_cap);

struct ComplexifyOutcome {
    LieAlgebraBasis complex_basis;
    /// True when the real basis stays independent over C, i.e. the real
    /// algebra is totally real inside its complexification.
    bool totally_real;
};

/// Canonical C-basis of the C-span of a real basis.
ComplexifyOutcome complexify(const LieAlgebraBasis& basis);

struct PropertyPReport {
    bool constants_present;
    bool euler_present;
    bool holds() const { return constants_present && euler_present; }
};

/// Checks that the span contains all constant fields and the Euler field.
PropertyPReport check_property_p(const LieAlgebraBasis& basis);

/// True when the values of the basis fields at a span the ambient tangent
/// space over C. Throws std::invalid_argument if a is not on m.
bool check_semi_homogeneous(const ManifoldSpec& m, const LieAlgebraBasis& basis, const Point& a);

}  // namespace holreg
