#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "holreg/manifold.hpp"
#include "holreg/poly_gcd.hpp"
#include "holreg/poly_matrix.hpp"

namespace holreg {

/// Rational function in reduced normal form: gcd(num, den) = 1 and den is
/// monic under graded lex. The zero function is 0/1.
class RatFun {
public:
    RatFun(MultiPoly num, MultiPoly den);

    static RatFun from_poly(MultiPoly p) {
        int n = p.nvars();
        return RatFun(std::move(p), MultiPoly::constant(n, GaussRational(1)));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;

    RatFun derivative(int var) const;

    /// Evaluation; throws std::domain_error on a denominator zero.
    GaussRational evaluate(const std::vector<GaussRational>& point) const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    MultiPoly num_, den_;
};

/// Substitutes rational functions for the variables of p.
RatFun poly_apply_ratfun(const MultiPoly& p, const std::vector<RatFun>& images);

struct PQPair {
    std::vector<MultiPoly> p;
    PolyMatrix q;
};

/// Normalized (p, q) data of a birational map with rational components g:
/// q = (Jacobian g)^{-1} entrywise polynomial and p = q * g. Throws
/// NonPolynomial when an entry fails to be polynomial, and
/// std::invalid_argument when the Jacobian is identically singular.
PQPair pullback_pq(const std::vector<RatFun>& g);

/// Birational self-map of C^n presented by its normalized pair: the map is
/// z -> q(z)^{-1} p(z). An optional inverse in the same form travels along.
class RationalMapQP {
public:
    RationalMapQP(std::vector<MultiPoly> p, PolyMatrix q,
                  std::shared_ptr<const RationalMapQP> inverse = nullptr);

    int n() const { return static_cast<int>(p_.size()); }
    const std::vector<MultiPoly>& p() const { return p_; }
    const PolyMatrix& q() const { return q_; }
    /// det q; its complement is the guaranteed-regular set.
    const MultiPoly& det_q() const { return det_q_; }
    const std::shared_ptr<const RationalMapQP>& inverse() const { return inverse_; }

    /// Components as reduced rational functions q^{-1} p.
    std::vector<RatFun> rational_components() const;

    /// Monic lcm of the reduced component denominators. Divides det q but
    /// can be strictly smaller.
    MultiPoly exact_denominator() const;

    Point apply(const Point& z) const;

private:
    std::vector<MultiPoly> p_;
    PolyMatrix q_;
    MultiPoly det_q_;
    std::shared_ptr<const RationalMapQP> inverse_;
};

/// Identity map on C^n.
RationalMapQP identity_map(int n);

/// Validates external (p, q) data: det q not identically zero and the
/// derivative identity g' = q^{-1} checked exactly at sample_count seeded
/// regular points. Throws std::invalid_argument with a witness on failure.
RationalMapQP reconstruct_from_pq(std::vector<MultiPoly> p, PolyMatrix q,
                                  std::shared_ptr<const RationalMapQP> inverse = nullptr,
                                  std::size_t sample_count = 10, std::uint64_t seed = 0);

/// Composition g1 after g2, renormalized through pullback_pq. Inverses
/// compose in the opposite order when both are present.
RationalMapQP compose(const RationalMapQP& g1, const RationalMapQP& g2);

struct OrbitWitness {
    Point source;
    Point image;
    bool source_on_manifold;
    bool image_on_manifold;
};

struct OrbitReport {
    std::size_t checked = 0;
    bool consistent = true;
    std::vector<OrbitWitness> witnesses;  // failures only
};

/// Seeded sampling check that g maps m into m. A sampling check, not a
/// proof: "consistent" means no sampled counterexample.
OrbitReport orbit_consistency(const ManifoldSpec& m, const RationalMapQP& g, std::size_t samples,
                              std::uint64_t seed);

}  // namespace holreg
