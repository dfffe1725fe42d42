#pragma once

#include <variant>
#include <vector>

#include "holreg/linalg.hpp"
#include "holreg/vector_field.hpp"

namespace holreg {

using Point = std::vector<GaussRational>;

/// Tuple of n x n Hermitian matrices defining a C^k-valued form
/// h_j(z, z') = z'^* H_j z : linear in z, conjugate linear in z'.
class HermitianFormTuple {
public:
    HermitianFormTuple(int n, std::vector<QiMatrix> matrices);

    int n() const { return n_; }
    int k() const { return static_cast<int>(matrices_.size()); }
    const QiMatrix& matrix(int j) const { return matrices_[static_cast<std::size_t>(j)]; }

    /// h_j(z, zp) at rational points.
    GaussRational value(int j, const std::vector<GaussRational>& z,
                        const std::vector<GaussRational>& zp) const;

private:
    int n_;
    std::vector<QiMatrix> matrices_;
};

struct NondegeneracyReport {
    bool independent;           // the H_j are linearly independent over R
    bool joint_kernel_trivial;  // no common kernel vector
    bool nondegenerate() const { return independent && joint_kernel_trivial; }
};

NondegeneracyReport check_hermitian_nondegenerate(const HermitianFormTuple& form);

/// Quadric Im w = h(z, z) in C^{n+k}; coordinates z_0..z_{n-1}, w_0..w_{k-1}.
struct QuadricSpec {
    HermitianFormTuple form;
    int n() const { return form.n(); }
    int k() const { return form.k(); }
    int ambient_dim() const { return form.n() + form.k(); }
};

/// Tube F + iR^n over the real cone F = {rho = 0}. rho lives in an
/// n-variable real ring; it must be quadratic in monic_var with a constant
/// top coefficient, and homogeneous unless allow_inhomogeneous is set (the
/// escape hatch exists for deliberately failing diagnostics).
struct TubeSpec {
    TubeSpec(int n, MultiPoly rho, int monic_var, bool allow_inhomogeneous = false);

    int n;
    MultiPoly rho;
    int monic_var;
    bool homogeneous;
    int ambient_dim() const { return n; }
};

class ManifoldSpec {
public:
    ManifoldSpec(QuadricSpec q) : data_(std::move(q)) {}
    ManifoldSpec(TubeSpec t) : data_(std::move(t)) {}

    bool is_quadric() const { return std::holds_alternative<QuadricSpec>(data_); }
    const QuadricSpec& quadric() const { return std::get<QuadricSpec>(data_); }
    const TubeSpec& tube() const { return std::get<TubeSpec>(data_); }

    int ambient_dim() const;

private:
    std::variant<QuadricSpec, TubeSpec> data_;
};

/// Exact tangency defect of a polynomial field along the manifold, expressed
/// in a real-variable ring. The field is tangent iff every entry is zero.
///
/// Quadric: ring (x_0..x_{n-1}, y_0..y_{n-1}, u_0..u_{k-1}), one entry per
/// form component: Im g_j - 2 Re h_j(f, z) after substituting z = x + iy and
/// w = u + i h(z, z).
///
/// Tube: ring (x_0..x_{n-1}, y_0..y_{n-1}), single entry
/// grad rho(x) . Re f(x + iy) reduced modulo rho in the monic variable.
std::vector<MultiPoly> tangency_residual(const ManifoldSpec& m, const PolyVectorField& xi);

bool is_tangent(const ManifoldSpec& m, const PolyVectorField& xi);

/// Exact membership of an ambient point.
bool membership(const ManifoldSpec& m, const Point& p);

/// Builds the quadric point (z, u + i h(z, z)) from free coordinates.
Point quadric_point(const QuadricSpec& q, const std::vector<GaussRational>& z,
                    const std::vector<Rational>& u);

/// Deterministic seeded rational points on the manifold, deduplicated.
/// Throws SamplingExhausted when the trial budget runs out first.
std::vector<Point> sample_points(const ManifoldSpec& m, std::size_t count, std::uint64_t seed,
                                 std::size_t budget = 20000);

struct TubeConditionReport {
    bool spans_affinely;       // F lies in no affine hyperplane (sampled witness)
    bool no_tangent_constant;  // exact: no real constant field tangent to F
};

/// spans_affinely is established by exhibiting n+1 affinely independent
/// sampled points; failure to find them raises SamplingExhausted rather than
/// reporting false. no_tangent_constant is decided exactly.
TubeConditionReport check_tube_conditions(const TubeSpec& t, std::uint64_t seed = 0,
                                          std::size_t budget = 20000);

}  // namespace holreg
