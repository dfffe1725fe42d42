#include "holreg/poly_gcd.hpp"

#include <stdexcept>

namespace holreg {

namespace {

// Coefficients of p viewed as a univariate polynomial in var; index = power
// of var, entries live in the full ring with var absent.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var) {
    const int n = p.nvars();
    int d = p.degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(d + 1), MultiPoly::zero(n));
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        int k = rest[var];
        rest[var] = 0;
        out[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return out;
}

MultiPoly times_var_power(const MultiPoly& p, int var, int k) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents shifted = e;
        shifted[var] += k;
        r.add_term(shifted, c);
    }
    return r;
}

int first_variable_used(const MultiPoly& p) {
    int v = -1;
    for (const auto& [e, c] : p.terms())
        for (int j = 0; j < p.nvars(); ++j)
            if (e[j] > 0 && (v == -1 || j < v)) v = j;
    return v;
}

// Content of p with respect to var: gcd of the univariate coefficients.
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly c = MultiPoly::zero(p.nvars());
    for (const MultiPoly& part : coefficients_in(p, var)) {
        if (part.is_zero()) continue;
        c = poly_gcd(c, part);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

MultiPoly primitive_part_in(const MultiPoly& p, const MultiPoly& content) {
    return poly_divide_exact(p, content);
}

// One primitive pseudo-remainder step in var; both inputs primitive in var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int var) {
    const int db = b.degree_in(var);
    auto bcoeffs = coefficients_in(b, var);
    const MultiPoly& lb = bcoeffs.back();
    MultiPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        MultiPoly lr = coefficients_in(r, var).back();
        // r := lb * r - lr * b * var^(dr-db); kills the top power of var.
        r = lb * r - times_var_power(lr * b, var, dr - db);
    }
    return r;
}

}  // namespace

MultiPoly poly_normalize(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_term().second.inverse());
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mixed polynomial rings");
    if (a.is_zero()) return poly_normalize(b);
    if (b.is_zero()) return poly_normalize(a);
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.nvars(), GaussRational(1));

    int var = first_variable_used(a);
    int vb = first_variable_used(b);
    if (vb != -1 && (var == -1 || vb < var)) var = vb;

    MultiPoly ca = content_in(a, var);
    MultiPoly cb = content_in(b, var);
    MultiPoly c = poly_gcd(ca, cb);
    MultiPoly A = primitive_part_in(a, ca);
    MultiPoly B = primitive_part_in(b, cb);

    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    while (!B.is_zero()) {
        MultiPoly r = pseudo_remainder(A, B, var);
        A = std::move(B);
        if (r.is_zero()) {
            B = MultiPoly::zero(a.nvars());
        } else {
            MultiPoly cr = content_in(r, var);
            B = primitive_part_in(r, cr);
        }
    }
    return poly_normalize(c * A);
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.nvars());
    MultiPoly g = poly_gcd(a, b);
    return poly_normalize(poly_divide_exact(a * b, g));
}

}  // namespace holreg
