#pragma once

#include <map>
#include <optional>
#include <vector>

#include "holreg/birational.hpp"
#include "holreg/hol_solver.hpp"

namespace holreg {

/// Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
/// Antisymmetry and the Jacobi identity are verified exactly on
/// construction.
class StructureConstants {
public:
    StructureConstants(std::size_t dim, std::vector<GaussRational> tensor);

    std::size_t dim() const { return dim_; }
    const GaussRational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }

private:
    std::size_t dim_;
    std::vector<GaussRational> tensor_;
};

/// Expands all pairwise brackets of the basis; throws NotClosed with the
/// offending pair when a bracket escapes the span.
StructureConstants structure_constants(const LieAlgebraBasis& basis);

/// Weight decomposition under ad of the Euler field: weight m collects the
/// degree-(m+1) parts. Each graded piece carries its own canonical basis.
struct GradedAlgebra {
    std::map<int, std::vector<PolyVectorField>> parts;

    std::size_t total_dim() const;
};

/// Requires the Euler field inside the span and every homogeneous part of
/// every basis element to stay inside the span; throws std::invalid_argument
/// otherwise.
GradedAlgebra grade_by_euler(const LieAlgebraBasis& basis);

/// Isotropy subalgebra at a point: fields in the span vanishing at a,
/// carried both as fields and as coordinate rows with respect to the basis.
struct IsotropyBasis {
    Point base_point;
    std::vector<PolyVectorField> elements;
    QiMatrix coords;  // rows: elements expressed in the ambient basis
};

/// Kernel of evaluation at a. For bases with all constants present the
/// codimension is the ambient dimension; a mismatch throws
/// std::invalid_argument naming the computed codimension.
IsotropyBasis isotropy_subalgebra(const LieAlgebraBasis& basis, const Point& a);

struct PushforwardMatrix {
    QiMatrix matrix;  // column j holds the coordinates of g_* e_j
};

/// Matrix of xi -> g_* xi on the span of the basis. g must carry its
/// inverse. Built by interpolation at seeded regular points, then verified
/// symbolically; throws std::invalid_argument when some g_* e_j leaves the
/// span (naming j) or when the attached inverse fails its spot check.
PushforwardMatrix pushforward_matrix(const LieAlgebraBasis& basis, const RationalMapQP& g,
                                     std::uint64_t seed = 0);

/// True when nu is invertible and preserves the bracket tensor:
/// nu [x,y] = [nu x, nu y] for all basis pairs.
bool preserves_structure(const QiMatrix& nu, const StructureConstants& sc);

/// Signature (plus, minus) of the Killing form; a coarse real-form
/// diagnostic for basis over the reals.
std::pair<std::size_t, std::size_t> killing_signature(const StructureConstants& sc);

}  // namespace holreg
