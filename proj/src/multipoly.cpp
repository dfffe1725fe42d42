#include "holreg/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace holreg {

namespace {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void check_expo(const Exponents& e, int nvars) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length does not match variable count");
    for (int v : e)
        if (v < 0) throw std::invalid_argument("negative exponent");
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, GaussRational c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[var] = 1;
    p.terms_.emplace(std::move(e), GaussRational(1));
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents expo, GaussRational c) {
    MultiPoly p(nvars);
    check_expo(expo, nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(expo), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return terms_.empty() ? -1 : d;
}

GaussRational MultiPoly::coeff(const Exponents& expo) const {
    check_expo(expo, nvars_);
    auto it = terms_.find(expo);
    return it == terms_.end() ? GaussRational() : it->second;
}

GaussRational MultiPoly::constant_term() const {
    return coeff(Exponents(nvars_, 0));
}

void MultiPoly::add_term(const Exponents& expo, const GaussRational& c) {
    check_expo(expo, nvars_);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(expo, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::pair<Exponents, GaussRational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("mixed polynomial rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const GaussRational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly r = constant(nvars_, GaussRational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::partial_derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * GaussRational(e[var]));
    }
    return r;
}

GaussRational MultiPoly::evaluate(const std::vector<GaussRational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    // Powers are cached per variable; exponents stay small in practice.
    std::vector<std::vector<GaussRational>> powers(nvars_, {GaussRational(1)});
    auto power = [&](int v, int e) -> const GaussRational& {
        auto& row = powers[v];
        while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * point[v]);
        return row[e];
    };
    GaussRational acc;
    for (const auto& [e, c] : terms_) {
        GaussRational term = c;
        for (int v = 0; v < nvars_; ++v)
            if (e[v] > 0) term *= power(v, e[v]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitution needs one image per variable");
    int target = images.front().nvars();
    for (const MultiPoly& im : images)
        if (im.nvars() != target) throw std::invalid_argument("substitution images in mixed rings");
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    auto power = [&](int v, int e) -> const MultiPoly& {
        auto& row = powers[v];
        if (row.empty()) row.push_back(MultiPoly::constant(target, GaussRational(1)));
        while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * images[v]);
        return row[e];
    };
    MultiPoly acc(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (int v = 0; v < nvars_; ++v)
            if (e[v] > 0) term = term * power(v, e[v]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::re_part() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (c.re != 0) r.terms_.emplace(e, GaussRational(c.re));
    return r;
}

MultiPoly MultiPoly::im_part() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (c.im != 0) r.terms_.emplace(e, GaussRational(c.im));
    return r;
}

MultiPoly MultiPoly::conj_coeffs() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

bool MultiPoly::has_real_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.im != 0) return false;
    return true;
}

bool MultiPoly::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print from the leading term down.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << gauss_to_string(c) << ")";
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            os << "*x" << v;
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

DivisionResult poly_divide(const MultiPoly& p, const MultiPoly& d) {
    if (p.nvars() != d.nvars()) throw std::invalid_argument("mixed polynomial rings");
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const int n = p.nvars();
    auto [lde, ldc] = d.leading_term();
    MultiPoly quot(n), rem(n), f = p;
    GaussRational ldc_inv = ldc.inverse();
    while (!f.is_zero()) {
        auto [lfe, lfc] = f.leading_term();
        bool divisible = true;
        for (int v = 0; v < n; ++v)
            if (lfe[v] < lde[v]) {
                divisible = false;
                break;
            }
        if (divisible) {
            Exponents q = lfe;
            for (int v = 0; v < n; ++v) q[v] -= lde[v];
            GaussRational qc = lfc * ldc_inv;
            MultiPoly t = MultiPoly::monomial(n, q, qc);
            quot += t;
            f -= t * d;
        } else {
            rem.add_term(lfe, lfc);
            f.add_term(lfe, -lfc);
        }
    }
    return {std::move(quot), std::move(rem)};
}

MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& d) {
    DivisionResult r = poly_divide(p, d);
    if (!r.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
    return std::move(r.quotient);
}

bool poly_try_divide(const MultiPoly& p, const MultiPoly& d, MultiPoly* quot) {
    DivisionResult r = poly_divide(p, d);
    if (!r.remainder.is_zero()) return false;
    if (quot) *quot = std::move(r.quotient);
    return true;
}

MultiPoly poly_reduce_mod(const MultiPoly& p, const MultiPoly& rho, int var) {
    if (p.nvars() != rho.nvars()) throw std::invalid_argument("mixed polynomial rings");
    const int n = p.nvars();
    const int d = rho.degree_in(var);
    if (d < 1) throw std::invalid_argument("relation does not involve the elimination variable");
    // Split rho = c * var^d + lower and require c constant.
    GaussRational lead;
    MultiPoly lower(n);
    for (const auto& [e, c] : rho.terms()) {
        if (e[var] == d) {
            Exponents rest = e;
            rest[var] = 0;
            bool pure = true;
            for (int v = 0; v < n; ++v)
                if (rest[v] != 0) pure = false;
            if (!pure)
                throw std::invalid_argument("top coefficient in the elimination variable is not constant");
            lead = c;
        } else {
            lower.add_term(e, c);
        }
    }
    if (lead.is_zero()) throw std::invalid_argument("relation has zero top coefficient");
    // var^d == subst where subst = -lower / lead.
    MultiPoly subst = lower.scaled(-lead.inverse());
    MultiPoly f = p;
    while (f.degree_in(var) >= d) {
        int top = f.degree_in(var);
        MultiPoly next(n);
        for (const auto& [e, c] : f.terms()) {
            if (e[var] == top && top >= d) {
                Exponents rest = e;
                rest[var] -= d;
                next += MultiPoly::monomial(n, rest, c) * subst;
            } else {
                next.add_term(e, c);
            }
        }
        f = std::move(next);
    }
    return f;
}

}  // namespace holreg
