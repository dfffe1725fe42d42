#pragma once

#include <optional>
#include <vector>

#include "holreg/lie_structure.hpp"

namespace holreg {

/// Projective Pluecker coordinates of an r-dimensional subspace of an
/// L-dimensional space: one maximal minor per r-subset of columns, subsets
/// in lexicographic order, scaled so the first nonzero coordinate is 1.
struct PlueckerPoint {
    std::size_t space_dim;  // L
    std::size_t sub_dim;    // r
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<GaussRational> coords;

    friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) {
        return a.space_dim == b.space_dim && a.sub_dim == b.sub_dim && a.coords == b.coords;
    }
};

/// All r-subsets of {0..L-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t space_dim, std::size_t sub_dim);

/// Pluecker coordinates of the row span of a full-row-rank matrix.
PlueckerPoint plucker_of_rows(const QiMatrix& rows);

/// Subspace presented both by coordinate rows and by its Pluecker point.
struct SubspacePoint {
    QiMatrix rows;
    PlueckerPoint plucker;
};

/// The isotropy subalgebra at a as a point of the Grassmannian of
/// (dim - n)-planes in the basis coordinates.
SubspacePoint subspace_point(const LieAlgebraBasis& basis, const Point& a);

PlueckerPoint plucker_point(const LieAlgebraBasis& basis, const Point& a);

/// Image subspace under the linear map nu (columns = images of basis
/// vectors): rows transform by nu^T, then the point is re-wedged.
SubspacePoint tau_apply(const QiMatrix& nu, const SubspacePoint& sp);

/// r-th compound matrix of nu acting on Pluecker coordinates:
/// out[S][T] = det nu[S, T]. Sizes are guarded; intended for small cases.
QiMatrix compound_matrix(const QiMatrix& nu, std::size_t sub_dim, std::size_t max_side = 1024);

struct IntertwiningWitness {
    Point sample;
    PlueckerPoint via_map;  // phi(g(a))
    PlueckerPoint via_tau;  // tau(nu)(phi(a))
};

struct IntertwiningReport {
    std::size_t checked = 0;
    bool all_equal = true;
    std::vector<IntertwiningWitness> witnesses;  // mismatches only
};

/// Checks phi(g(a)) == tau(nu(g))(phi(a)) at seeded points of the regular
/// set of g. nu_override substitutes for the computed pushforward matrix
/// (diagnostics and negative controls); when absent, g must carry its
/// inverse so the pushforward can be derived.
IntertwiningReport verify_intertwining(const LieAlgebraBasis& basis, const RationalMapQP& g,
                                       std::size_t samples, std::uint64_t seed,
                                       const std::optional<QiMatrix>& nu_override = std::nullopt);

}  // namespace holreg
