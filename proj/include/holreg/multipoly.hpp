#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holreg/rational.hpp"

namespace holreg {

using Exponents = std::vector<int>;

/// Graded lexicographic order on exponent vectors of equal length: first by
/// total degree, ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over Q(i) with a fixed number of variables.
/// Terms are stored in a std::map under graded lex, so iteration order, and
/// hence every serialization, is canonical. Zero coefficients are never
/// stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussRational, GradedLexLess>;

    explicit MultiPoly(int nvars);

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, GaussRational c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly monomial(int nvars, Exponents expo, GaussRational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Max total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    GaussRational coeff(const Exponents& expo) const;
    GaussRational constant_term() const;

    /// Adds c * x^expo, erasing the term if the sum cancels.
    void add_term(const Exponents& expo, const GaussRational& c);

    /// Highest term under graded lex. Throws std::domain_error on zero.
    std::pair<Exponents, GaussRational> leading_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly scaled(const GaussRational& c) const;
    MultiPoly pow(int e) const;

    MultiPoly partial_derivative(int var) const;

    GaussRational evaluate(const std::vector<GaussRational>& point) const;

    /// Simultaneous substitution x_j := images[j]. images live in a common
    /// ring whose variable count defines the result.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Coefficientwise real part, imaginary part, conjugate.
    MultiPoly re_part() const;
    MultiPoly im_part() const;
    MultiPoly conj_coeffs() const;
    bool has_real_coeffs() const;

    /// True when every term has total degree equal to d (vacuously true only
    /// for d matching: the zero polynomial is homogeneous of every degree).
    bool is_homogeneous(int d) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Debug rendering, e.g. "2*x0^2*x1 - 1/2*i".
    std::string to_string() const;

private:
    void check_same_ring(const MultiPoly& o) const;

    int nvars_;
    TermMap terms_;
};

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

/// Multivariate division by a single divisor under graded lex. Satisfies
/// p = quotient * d + remainder, and no remainder term is divisible by the
/// leading monomial of d.
DivisionResult poly_divide(const MultiPoly& p, const MultiPoly& d);

/// Quotient of an exact division. Throws std::domain_error when the
/// remainder is nonzero.
MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& d);

/// True iff d divides p, with the quotient written to *quot when non-null.
bool poly_try_divide(const MultiPoly& p, const MultiPoly& d, MultiPoly* quot);

/// Remainder of p modulo the relation rho = 0 solved for var. rho must have
/// a nonzero constant coefficient on its top power var^d; every var^d is
/// rewritten via var^d = -(lower-order part)/c until deg_var(p) < d.
MultiPoly poly_reduce_mod(const MultiPoly& p, const MultiPoly& rho, int var);

}  // namespace holreg
