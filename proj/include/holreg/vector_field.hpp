#pragma once

#include <map>
#include <optional>
#include <vector>

#include "holreg/linalg.hpp"
#include "holreg/multipoly.hpp"

namespace holreg {

/// Vector field with polynomial coefficients on C^n: sum_j f_j(z) d/dz_j.
/// Components all live in the n-variable ring.
class PolyVectorField {
public:
    explicit PolyVectorField(std::vector<MultiPoly> components);

    static PolyVectorField zero(int n);
    /// Constant field sum_j c_j d/dz_j.
    static PolyVectorField constant(int n, const std::vector<GaussRational>& c);
    /// d/dz_c.
    static PolyVectorField coordinate(int n, int c);
    /// Euler field sum_j z_j d/dz_j.
    static PolyVectorField euler(int n);

    int dim() const { return static_cast<int>(components_.size()); }
    const MultiPoly& component(int j) const { return components_[static_cast<std::size_t>(j)]; }
    const std::vector<MultiPoly>& components() const { return components_; }

    bool is_zero() const;
    /// Max component degree; -1 for the zero field.
    int degree() const;

    std::vector<GaussRational> evaluate(const std::vector<GaussRational>& point) const;

    PolyVectorField operator-() const;
    PolyVectorField& operator+=(const PolyVectorField& o);
    PolyVectorField& operator-=(const PolyVectorField& o);
    PolyVectorField scaled(const GaussRational& c) const;

    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }

    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<MultiPoly> components_;
};

/// Lie bracket [xi, zeta]_k = sum_j (xi_j d zeta_k/dz_j - zeta_j d xi_k/dz_j).
/// With this sign, [euler, c] = -c for constant fields c and
/// [euler, P] = m P for P with homogeneous components of degree m + 1.
PolyVectorField bracket(const PolyVectorField& xi, const PolyVectorField& zeta);

/// Splits a field into ad-euler eigenparts: weight m collects the component
/// terms of total degree m + 1. Keys ascend; zero parts are absent.
std::map<int, PolyVectorField> homogeneous_components(const PolyVectorField& xi);

/// Shared coordinatization of a family of fields: the ordered union of
/// (component index, monomial) keys across all inputs.
class FieldSupport {
public:
    explicit FieldSupport(const std::vector<PolyVectorField>& fields);

    std::size_t size() const { return keys_.size(); }

    /// Coordinate row of xi, or nullopt if xi has a term outside the support.
    std::optional<std::vector<GaussRational>> coordinates(const PolyVectorField& xi) const;

    /// Stacked coordinate rows for fields inside the support; throws if any
    /// field escapes (callers pass the family the support was built from).
    QiMatrix matrix(const std::vector<PolyVectorField>& fields) const;

    /// Inverse of coordinates: rebuilds a field from a coordinate row.
    PolyVectorField field_from(const std::vector<GaussRational>& row) const;

    int ambient_dim() const { return n_; }

private:
    int n_;
    std::vector<std::pair<int, Exponents>> keys_;
    std::map<std::pair<int, Exponents>, std::size_t> index_;
};

enum class Ground { Real, Complex };

/// Coordinates of target in the span of basis over the ground field:
/// real spans take rational coefficients on realified coordinates, complex
/// spans take Q(i) coefficients. nullopt when target is outside the span.
std::optional<std::vector<GaussRational>> expand_in_span(
    const std::vector<PolyVectorField>& basis, const PolyVectorField& target, Ground ground);

bool in_span(const std::vector<PolyVectorField>& basis, const PolyVectorField& target,
             Ground ground);

}  // namespace holreg
