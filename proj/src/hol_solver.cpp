#include "holreg/hol_solver.hpp"

#include <map>
#include <stdexcept>

namespace holreg {

namespace {

// Monomials of total degree <= cap in nvars variables, ascending graded lex.
std::vector<Exponents> monomials_up_to(int nvars, int cap) {
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    // Enumerate by total degree, lexicographic within a degree.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            e[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(e);
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            e[static_cast<std::size_t>(pos)] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    for (int d = 0; d <= cap; ++d) rec(rec, 0, d);
    // The recursion above emits degree blocks in order but descending lex
    // inside a block; restore ascending graded lex.
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace

SolveOutcome solve_hol(const ManifoldSpec& m, int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("negative degree cap");
    const int amb = m.ambient_dim();
    const std::vector<Exponents> monos = monomials_up_to(amb, degree_cap);
    const std::size_t cells = static_cast<std::size_t>(amb) * monos.size();

    // Unknown layout: ((component * #monomials + monomial) * 2 + {re, im}).
    // The residual map is R-linear in the field, so the re and im prongs of
    // each coefficient contribute independent columns.
    std::map<std::pair<std::size_t, Exponents>, std::size_t, std::less<>> row_index;
    std::vector<std::vector<std::pair<std::size_t, GaussRational>>> columns(2 * cells);

    std::size_t col = 0;
    for (int c = 0; c < amb; ++c) {
        for (const Exponents& e : monos) {
            for (int part = 0; part < 2; ++part) {
                GaussRational coeff = part == 0 ? GaussRational(1) : GaussRational::i();
                std::vector<MultiPoly> comps(static_cast<std::size_t>(amb), MultiPoly::zero(amb));
                comps[static_cast<std::size_t>(c)] = MultiPoly::monomial(amb, e, coeff);
                std::vector<MultiPoly> residual =
                    tangency_residual(m, PolyVectorField(std::move(comps)));
                for (std::size_t r = 0; r < residual.size(); ++r)
                    for (const auto& [expo, value] : residual[r].terms()) {
                        auto key = std::make_pair(r, expo);
                        auto it = row_index.find(key);
                        if (it == row_index.end())
                            it = row_index.emplace(std::move(key), row_index.size()).first;
                        columns[col].emplace_back(it->second, value);
                    }
                ++col;
            }
        }
    }

    QiMatrix system(row_index.empty() ? 1 : row_index.size(), 2 * cells);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [r, v] : columns[j]) system.at(r, j) = v;

    // Residuals of real-coefficient generators are real linear forms in the
    // unknowns, so the kernel is rational and RREF keeps it canonical.
    QiMatrix kernel = kernel_basis(system);

    std::vector<PolyVectorField> elements;
    elements.reserve(kernel.rows());
    for (std::size_t krow = 0; krow < kernel.rows(); ++krow) {
        std::vector<MultiPoly> comps(static_cast<std::size_t>(amb), MultiPoly::zero(amb));
        std::size_t j = 0;
        for (int c = 0; c < amb; ++c)
            for (const Exponents& e : monos) {
                const GaussRational& re = kernel.at(krow, j++);
                const GaussRational& im = kernel.at(krow, j++);
                if (re.is_zero() && im.is_zero()) continue;
                GaussRational coeff(re.re - im.im, re.im + im.re);  // re + i*im
                comps[static_cast<std::size_t>(c)].add_term(e, coeff);
            }
        PolyVectorField xi(std::move(comps));
        if (!is_tangent(m, xi)) throw std::logic_error("solver produced a non-tangent field");
        elements.push_back(std::move(xi));
    }

    SolveOutcome out{LieAlgebraBasis{Ground::Real, amb, degree_cap, std::move(elements)}, true, {}};
    const auto& els = out.basis.elements;
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            PolyVectorField br = bracket(els[i], els[j]);
            if (br.degree() > degree_cap || !in_span(els, br, Ground::Real)) {
                out.bracket_closed = false;
                out.closure_failures.emplace_back(i, j);
            }
        }
    return out;
}

StabilizationOutcome solve_hol_stabilized(const ManifoldSpec& m, int degree_cap) {
    SolveOutcome at_cap = solve_hol(m, degree_cap);
    SolveOutcome next = solve_hol(m, degree_cap + 1);
    bool stable = next.basis.dim() == at_cap.basis.dim();
    return {std::move(at_cap), next.basis.dim(), stable};
}

ComplexifyOutcome complexify(const LieAlgebraBasis& basis) {
    if (basis.elements.empty()) throw std::invalid_argument("empty basis");
    FieldSupport support(basis.elements);
    QiMatrix rows = support.matrix(basis.elements);
    RrefResult r = rref(rows);
    std::vector<PolyVectorField> elements;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        elements.push_back(support.field_from(r.mat.row(i)));
    bool totally_real = r.pivot_cols.size() == basis.elements.size();
    return {LieAlgebraBasis{Ground::Complex, basis.ambient_dim, basis.degree_cap,
                            std::move(elements)},
            totally_real};
}

PropertyPReport check_property_p(const LieAlgebraBasis& basis) {
    // The solvable algebra s = {(alpha + cz) d/dz} must sit inside the
    // complexification, not in the real span itself.
    const int n = basis.ambient_dim;
    const std::vector<PolyVectorField>& span = basis.elements;
    PropertyPReport report{true, true};
    for (int c = 0; c < n && report.constants_present; ++c)
        if (!in_span(span, PolyVectorField::coordinate(n, c), Ground::Complex))
            report.constants_present = false;
    report.euler_present = in_span(span, PolyVectorField::euler(n), Ground::Complex);
    return report;
}

bool check_semi_homogeneous(const ManifoldSpec& m, const LieAlgebraBasis& basis, const Point& a) {
    if (!membership(m, a)) throw std::invalid_argument("base point is not on the manifold");
    QiMatrix values(basis.elements.size(), static_cast<std::size_t>(basis.ambient_dim));
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        auto v = basis.elements[i].evaluate(a);
        for (std::size_t j = 0; j < v.size(); ++j) values.at(i, j) = v[j];
    }
    return rank(values) == static_cast<std::size_t>(basis.ambient_dim);
}

}  // namespace holreg
