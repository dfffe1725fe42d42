#include "holreg/lie_structure.hpp"

#include <stdexcept>

#include "holreg/errors.hpp"
#include "holreg/rng.hpp"

namespace holreg {

namespace {

std::vector<GaussRational> realify_row(const std::vector<GaussRational>& v) {
    std::vector<GaussRational> out;
    out.reserve(2 * v.size());
    for (const GaussRational& z : v) out.emplace_back(z.re);
    for (const GaussRational& z : v) out.emplace_back(z.im);
    return out;
}

std::vector<GaussRational> unrealify_row(const std::vector<GaussRational>& v) {
    const std::size_t s = v.size() / 2;
    std::vector<GaussRational> out;
    out.reserve(s);
    for (std::size_t j = 0; j < s; ++j) out.emplace_back(v[j].re, v[s + j].re);
    return out;
}

/// Canonical basis of the span of a family over the requested ground field.
std::vector<PolyVectorField> canonical_span_basis(const std::vector<PolyVectorField>& fields,
                                                  Ground ground) {
    std::vector<PolyVectorField> nonzero;
    for (const PolyVectorField& f : fields)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return {};
    FieldSupport support(nonzero);
    QiMatrix rows = support.matrix(nonzero);
    std::vector<PolyVectorField> out;
    if (ground == Ground::Complex) {
        RrefResult r = rref(rows);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            out.push_back(support.field_from(r.mat.row(i)));
    } else {
        QiMatrix real(rows.rows(), 2 * rows.cols());
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            auto rr = realify_row(rows.row(i));
            for (std::size_t j = 0; j < rr.size(); ++j) real.at(i, j) = rr[j];
        }
        RrefResult r = rref(real);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            out.push_back(support.field_from(unrealify_row(r.mat.row(i))));
    }
    return out;
}

}  // namespace

StructureConstants::StructureConstants(std::size_t dim, std::vector<GaussRational> tensor)
    : dim_(dim), tensor_(std::move(tensor)) {
    if (tensor_.size() != dim * dim * dim)
        throw std::invalid_argument("structure tensor size mismatch");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (at(i, j, k) != -at(j, i, k))
                    throw std::invalid_argument("structure tensor is not antisymmetric");
    // Jacobi: sum over cyclic permutations of [[e_i, e_j], e_k] vanishes.
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k)
                for (std::size_t l = 0; l < dim; ++l) {
                    GaussRational acc;
                    for (std::size_t mm = 0; mm < dim; ++mm) {
                        acc += at(i, j, mm) * at(mm, k, l);
                        acc += at(j, k, mm) * at(mm, i, l);
                        acc += at(k, i, mm) * at(mm, j, l);
                    }
                    if (!acc.is_zero())
                        throw std::invalid_argument("structure tensor violates the Jacobi identity");
                }
}

StructureConstants structure_constants(const LieAlgebraBasis& basis) {
    const std::size_t d = basis.dim();
    std::vector<GaussRational> tensor(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            PolyVectorField br = bracket(basis.elements[i], basis.elements[j]);
            auto coords = expand_in_span(basis.elements, br, basis.ground);
            if (!coords) throw NotClosed(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                tensor[(i * d + j) * d + k] = (*coords)[k];
                tensor[(j * d + i) * d + k] = -(*coords)[k];
            }
        }
    return StructureConstants(d, std::move(tensor));
}

std::size_t GradedAlgebra::total_dim() const {
    std::size_t d = 0;
    for (const auto& [w, fields] : parts) d += fields.size();
    return d;
}

GradedAlgebra grade_by_euler(const LieAlgebraBasis& basis) {
    const int n = basis.ambient_dim;
    if (!in_span(basis.elements, PolyVectorField::euler(n), basis.ground))
        throw std::invalid_argument("Euler field is not in the span");
    std::map<int, std::vector<PolyVectorField>> collected;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        for (auto& [w, part] : homogeneous_components(basis.elements[i])) {
            if (!in_span(basis.elements, part, basis.ground))
                throw std::invalid_argument("homogeneous part of basis element " +
                                            std::to_string(i) + " leaves the span");
            collected[w].push_back(std::move(part));
        }
    }
    GradedAlgebra out;
    for (auto& [w, fields] : collected) {
        auto canon = canonical_span_basis(fields, basis.ground);
        if (!canon.empty()) out.parts.emplace(w, std::move(canon));
    }
    // Distinct weights are independent, so the graded dimensions must add up.
    if (out.total_dim() != basis.dim())
        throw std::logic_error("graded dimensions do not sum to the algebra dimension");
    return out;
}

IsotropyBasis isotropy_subalgebra(const LieAlgebraBasis& basis, const Point& a) {
    const std::size_t d = basis.dim();
    const std::size_t amb = static_cast<std::size_t>(basis.ambient_dim);
    if (a.size() != amb) throw std::invalid_argument("point dimension mismatch");
    // Kernel of evaluation: rows of the system are ambient components (and
    // their imaginary prongs for real ground), columns are basis members.
    const bool complex_ground = basis.ground == Ground::Complex;
    QiMatrix sys(complex_ground ? amb : 2 * amb, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto v = basis.elements[i].evaluate(a);
        for (std::size_t c = 0; c < amb; ++c) {
            if (complex_ground) {
                sys.at(c, i) = v[c];
            } else {
                sys.at(c, i) = GaussRational(v[c].re);
                sys.at(amb + c, i) = GaussRational(v[c].im);
            }
        }
    }
    QiMatrix coords = kernel_basis(sys);
    if (coords.rows() + amb != d)
        throw std::invalid_argument("isotropy codimension is " +
                                    std::to_string(d - coords.rows()) + ", expected " +
                                    std::to_string(amb));
    std::vector<PolyVectorField> elements;
    for (std::size_t r = 0; r < coords.rows(); ++r) {
        PolyVectorField acc = PolyVectorField::zero(basis.ambient_dim);
        for (std::size_t i = 0; i < d; ++i)
            if (!coords.at(r, i).is_zero()) acc += basis.elements[i].scaled(coords.at(r, i));
        elements.push_back(std::move(acc));
    }
    return {a, std::move(elements), std::move(coords)};
}

namespace {

// xi composed with the rational map B / e, cleared by e^deg(xi): substitutes
// x_j -> B_j / e into each component and multiplies by e^deg.
MultiPoly substitute_cleared(const MultiPoly& f, const std::vector<MultiPoly>& b,
                             const MultiPoly& e, int clear_deg) {
    const int n = f.nvars();
    if (clear_deg < f.degree()) throw std::logic_error("clearing degree too small");
    std::vector<std::vector<MultiPoly>> bpow(b.size());
    std::vector<MultiPoly> epow{MultiPoly::constant(n, GaussRational(1))};
    auto bp = [&](std::size_t v, int k) -> const MultiPoly& {
        auto& row = bpow[v];
        if (row.empty()) row.push_back(MultiPoly::constant(n, GaussRational(1)));
        while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * b[v]);
        return row[static_cast<std::size_t>(k)];
    };
    auto ep = [&](int k) -> const MultiPoly& {
        while (static_cast<int>(epow.size()) <= k) epow.push_back(epow.back() * e);
        return epow[static_cast<std::size_t>(k)];
    };
    MultiPoly acc(n);
    for (const auto& [expo, c] : f.terms()) {
        int total = 0;
        MultiPoly term = MultiPoly::constant(n, c);
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (expo[v] == 0) continue;
            total += expo[v];
            term = term * bp(v, expo[v]);
        }
        acc += term * ep(clear_deg - total);
    }
    return acc;
}

}  // namespace

PushforwardMatrix pushforward_matrix(const LieAlgebraBasis& basis, const RationalMapQP& g,
                                     std::uint64_t seed) {
    if (!g.inverse()) throw std::invalid_argument("pushforward needs a map with an inverse");
    const int n = basis.ambient_dim;
    if (g.n() != n) throw std::invalid_argument("map dimension does not match the basis");
    const std::size_t d = basis.dim();

    // Canonical (p, q) of the inverse; external inverses may be scaled, so
    // the pair is re-extracted from the rational components.
    PQPair tilde = pullback_pq(g.inverse()->rational_components());
    RationalMapQP gt(tilde.p, tilde.q);

    // Interpolation system: one equation per (sample, ambient component),
    // sum_i c_ij (xi_i(z))_c = (q~(z) xi_j(g~(z)))_c. Real ground keeps the
    // coefficients c real, so each complex equation splits into two rows.
    const bool complex_ground = basis.ground == Ground::Complex;
    QiMatrix lhs(0, 0), rhs(0, 0);
    SplitMix64 rng(seed ^ 0x51ed270b5f2c5f14ULL);
    std::size_t budget = 200 * (d + 2);
    std::size_t rank_now = 0;
    for (std::size_t trial = 0; trial < budget && rank_now < d; ++trial) {
        Point z;
        for (int i = 0; i < n; ++i) z.push_back(small_gauss(rng));
        if (gt.det_q().evaluate(z).is_zero()) continue;
        Point gz = gt.apply(z);
        if (g.det_q().evaluate(gz).is_zero()) continue;
        if (g.apply(gz) != z)
            throw std::invalid_argument("attached inverse fails g(g^{-1}(z)) = z at a sample");
        QiMatrix qz = QiMatrix::from_rows(gt.q().evaluate(z));
        std::vector<Point> vals_z(d), push_gz(d);
        for (std::size_t j = 0; j < d; ++j) {
            vals_z[j] = basis.elements[j].evaluate(z);
            push_gz[j] = qz.apply(basis.elements[j].evaluate(gz));
        }
        for (int c = 0; c < n; ++c) {
            std::vector<GaussRational> lrow(d), rrow(d);
            for (std::size_t j = 0; j < d; ++j) {
                lrow[j] = vals_z[j][static_cast<std::size_t>(c)];
                rrow[j] = push_gz[j][static_cast<std::size_t>(c)];
            }
            if (complex_ground) {
                lhs.append_row(lrow);
                rhs.append_row(rrow);
            } else {
                std::vector<GaussRational> lre(d), lim(d), rre(d), rim(d);
                for (std::size_t j = 0; j < d; ++j) {
                    lre[j] = GaussRational(lrow[j].re);
                    lim[j] = GaussRational(lrow[j].im);
                    rre[j] = GaussRational(rrow[j].re);
                    rim[j] = GaussRational(rrow[j].im);
                }
                lhs.append_row(lre);
                rhs.append_row(rre);
                lhs.append_row(lim);
                rhs.append_row(rim);
            }
        }
        rank_now = rank(lhs);
    }
    if (rank_now < d) throw SamplingExhausted("could not reach full rank while interpolating");

    std::optional<QiMatrix> solved = solve_system(lhs, rhs);
    if (!solved) throw std::invalid_argument("pushforward leaves the span (inconsistent samples)");
    QiMatrix nu = *solved;

    // Mandatory symbolic verification: q~(z) xi_j(g~(z)) == sum_i nu_ij xi_i(z)
    // after clearing det q~ to the degree of xi_j.
    AdjugateResult adjt = poly_adjugate(gt.q());
    std::vector<MultiPoly> bnum = adjt.adjugate.apply(gt.p());
    for (std::size_t j = 0; j < d; ++j) {
        int deg = std::max(basis.elements[j].degree(), 0);
        MultiPoly clear = adjt.det.pow(deg);
        for (int c = 0; c < n; ++c) {
            MultiPoly lhs_poly(n);
            for (int l = 0; l < n; ++l) {
                const MultiPoly& qcl = gt.q().at(static_cast<std::size_t>(c),
                                                 static_cast<std::size_t>(l));
                if (qcl.is_zero()) continue;
                lhs_poly += qcl * substitute_cleared(basis.elements[j].component(l), bnum,
                                                     adjt.det, deg);
            }
            MultiPoly rhs_poly(n);
            for (std::size_t i = 0; i < d; ++i) {
                const GaussRational& c_ij = nu.at(i, j);
                if (c_ij.is_zero()) continue;
                rhs_poly += basis.elements[i].component(c).scaled(c_ij);
            }
            if (lhs_poly != clear * rhs_poly)
                throw std::invalid_argument("pushforward of basis element " + std::to_string(j) +
                                            " leaves the span");
        }
    }
    return {std::move(nu)};
}

bool preserves_structure(const QiMatrix& nu, const StructureConstants& sc) {
    const std::size_t d = sc.dim();
    if (nu.rows() != d || nu.cols() != d) throw std::invalid_argument("matrix size mismatch");
    if (det(nu).is_zero()) return false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                GaussRational want;
                for (std::size_t k = 0; k < d; ++k) want += sc.at(i, j, k) * nu.at(l, k);
                GaussRational got;
                for (std::size_t a = 0; a < d; ++a) {
                    if (nu.at(a, i).is_zero()) continue;
                    for (std::size_t b = 0; b < d; ++b) {
                        if (nu.at(b, j).is_zero()) continue;
                        got += nu.at(a, i) * nu.at(b, j) * sc.at(a, b, l);
                    }
                }
                if (want != got) return false;
            }
    return true;
}

std::pair<std::size_t, std::size_t> killing_signature(const StructureConstants& sc) {
    const std::size_t d = sc.dim();
    QiMatrix killing(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            GaussRational acc;
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t l = 0; l < d; ++l) acc += sc.at(i, m, l) * sc.at(j, l, m);
            killing.at(i, j) = acc;
            if (acc.im != 0)
                throw std::invalid_argument("Killing signature needs a real structure tensor");
        }
    // Congruence diagonalization over Q with the hyperbolic-pair fallback.
    std::vector<std::size_t> live(d);
    for (std::size_t i = 0; i < d; ++i) live[i] = i;
    std::size_t plus = 0, minus = 0;
    auto entry = [&](std::size_t a, std::size_t b) -> GaussRational& { return killing.at(a, b); };
    while (!live.empty()) {
        std::size_t pick = live.size();
        for (std::size_t t = 0; t < live.size(); ++t)
            if (!entry(live[t], live[t]).is_zero()) {
                pick = t;
                break;
            }
        if (pick < live.size()) {
            std::size_t r = live[pick];
            Rational dval = entry(r, r).re;
            (dval > 0 ? plus : minus) += 1;
            GaussRational inv = entry(r, r).inverse();
            for (std::size_t ti = 0; ti < live.size(); ++ti) {
                std::size_t i = live[ti];
                if (i == r) continue;
                GaussRational f = entry(i, r) * inv;
                for (std::size_t tj = 0; tj < live.size(); ++tj) {
                    std::size_t j = live[tj];
                    if (j == r) continue;
                    entry(i, j) -= f * entry(r, j);
                }
            }
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick));
        } else {
            // All diagonal entries vanish; find an off-diagonal pair.
            std::size_t ra = live.size(), rb = live.size();
            for (std::size_t ti = 0; ti < live.size() && ra == live.size(); ++ti)
                for (std::size_t tj = ti + 1; tj < live.size(); ++tj)
                    if (!entry(live[ti], live[tj]).is_zero()) {
                        ra = ti;
                        rb = tj;
                        break;
                    }
            if (ra == live.size()) break;  // remaining block is zero: degenerate part
            std::size_t r = live[ra], s = live[rb];
            GaussRational a = entry(r, s);
            plus += 1;
            minus += 1;
            GaussRational ainv = a.inverse();
            for (std::size_t ti = 0; ti < live.size(); ++ti) {
                std::size_t i = live[ti];
                if (i == r || i == s) continue;
                GaussRational vi = entry(i, r), wi = entry(i, s);
                for (std::size_t tj = 0; tj < live.size(); ++tj) {
                    std::size_t j = live[tj];
                    if (j == r || j == s) continue;
                    entry(i, j) -= (vi * entry(s, j) + wi * entry(r, j)) * ainv;
                }
            }
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(rb));
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(ra));
        }
    }
    return {plus, minus};
}

}  // namespace holreg
