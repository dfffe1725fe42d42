#pragma once

#include <json.hpp>

#include "holreg/hol_solver.hpp"
#include "holreg/lie_structure.hpp"
#include "holreg/manifold.hpp"
#include "holreg/regularizer.hpp"

namespace holreg {

/// Key order is preserved on emission so reports serialize byte-identically.
using Json = nlohmann::ordered_json;

Json gauss_to_json(const GaussRational& z);
/// Accepts {"re": r, "im": r}, a bare rational string, or an integer.
GaussRational gauss_from_json(const Json& j);

Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, int nvars);

Json field_to_json(const PolyVectorField& f);
PolyVectorField field_from_json(const Json& j);

Json basis_to_json(const LieAlgebraBasis& b);
LieAlgebraBasis basis_from_json(const Json& j);

Json manifold_to_json(const ManifoldSpec& m);
ManifoldSpec manifold_from_json(const Json& j);

Json map_to_json(const RationalMapQP& g);
/// Parses (p, q) and optional nested inverse. Construction checks shapes and
/// det q only; the derivative identity is a separate, explicit validation.
RationalMapQP map_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json matrix_to_json(const QiMatrix& m);
QiMatrix matrix_from_json(const Json& j);

/// Subsets are emitted 1-based.
Json plucker_to_json(const PlueckerPoint& p);

Json structure_to_json(const StructureConstants& sc);

Json grading_to_json(const GradedAlgebra& g);

/// FNV-1a 64-bit digest as fixed-width hex; used to fingerprint inputs.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace holreg
