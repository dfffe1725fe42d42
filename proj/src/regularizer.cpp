#include "holreg/regularizer.hpp"

#include <stdexcept>

#include "holreg/errors.hpp"
#include "holreg/rng.hpp"

namespace holreg {

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t space_dim, std::size_t sub_dim) {
    if (sub_dim > space_dim) throw std::invalid_argument("subset size exceeds the space dimension");
    if (sub_dim == 0) return {{}};
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(sub_dim);
    for (std::size_t i = 0; i < sub_dim; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        // Advance to the next subset in lexicographic order.
        std::size_t i = sub_dim;
        while (i > 0) {
            --i;
            if (cur[i] != i + space_dim - sub_dim) break;
            if (i == 0) return out;
        }
        if (cur[i] == i + space_dim - sub_dim) return out;
        ++cur[i];
        for (std::size_t j = i + 1; j < sub_dim; ++j) cur[j] = cur[j - 1] + 1;
    }
}

namespace {

GaussRational minor_det(const QiMatrix& rows, const std::vector<std::size_t>& cols) {
    const std::size_t r = rows.rows();
    QiMatrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = rows.at(i, cols[j]);
    return det(sub);
}

}  // namespace

PlueckerPoint plucker_of_rows(const QiMatrix& rows) {
    const std::size_t r = rows.rows(), big_l = rows.cols();
    if (r == 0 || r > big_l) throw std::invalid_argument("degenerate subspace shape");
    PlueckerPoint pt;
    pt.space_dim = big_l;
    pt.sub_dim = r;
    pt.subsets = subsets_lex(big_l, r);
    pt.coords.reserve(pt.subsets.size());
    for (const auto& s : pt.subsets) pt.coords.push_back(minor_det(rows, s));
    // Projective normalization: first nonzero coordinate becomes 1.
    const GaussRational* first = nullptr;
    for (const GaussRational& c : pt.coords)
        if (!c.is_zero()) {
            first = &c;
            break;
        }
    if (!first) throw std::invalid_argument("subspace rows are rank deficient");
    GaussRational inv = first->inverse();
    for (GaussRational& c : pt.coords) c *= inv;
    return pt;
}

SubspacePoint subspace_point(const LieAlgebraBasis& basis, const Point& a) {
    IsotropyBasis iso = isotropy_subalgebra(basis, a);
    PlueckerPoint pt = plucker_of_rows(iso.coords);
    return {std::move(iso.coords), std::move(pt)};
}

PlueckerPoint plucker_point(const LieAlgebraBasis& basis, const Point& a) {
    return subspace_point(basis, a).plucker;
}

SubspacePoint tau_apply(const QiMatrix& nu, const SubspacePoint& sp) {
    if (nu.rows() != nu.cols() || nu.rows() != sp.rows.cols())
        throw std::invalid_argument("matrix size does not match the subspace coordinates");
    QiMatrix image = sp.rows * nu.transpose();
    return {image, plucker_of_rows(image)};
}

QiMatrix compound_matrix(const QiMatrix& nu, std::size_t sub_dim, std::size_t max_side) {
    if (nu.rows() != nu.cols()) throw std::invalid_argument("compound of a non-square matrix");
    auto subs = subsets_lex(nu.rows(), sub_dim);
    if (subs.size() > max_side)
        throw std::invalid_argument("compound matrix side " + std::to_string(subs.size()) +
                                    " exceeds the guard " + std::to_string(max_side));
    QiMatrix c(subs.size(), subs.size());
    QiMatrix block(sub_dim, sub_dim);
    for (std::size_t si = 0; si < subs.size(); ++si)
        for (std::size_t ti = 0; ti < subs.size(); ++ti) {
            for (std::size_t i = 0; i < sub_dim; ++i)
                for (std::size_t j = 0; j < sub_dim; ++j)
                    block.at(i, j) = nu.at(subs[si][i], subs[ti][j]);
            c.at(si, ti) = det(block);
        }
    return c;
}

IntertwiningReport verify_intertwining(const LieAlgebraBasis& basis, const RationalMapQP& g,
                                       std::size_t samples, std::uint64_t seed,
                                       const std::optional<QiMatrix>& nu_override) {
    const int n = basis.ambient_dim;
    if (g.n() != n) throw std::invalid_argument("map dimension does not match the basis");
    QiMatrix nu = nu_override ? *nu_override : pushforward_matrix(basis, g, seed).matrix;
    if (nu.rows() != basis.dim() || nu.cols() != basis.dim())
        throw std::invalid_argument("pushforward matrix size does not match the basis");

    IntertwiningReport report;
    SplitMix64 rng(seed);
    std::size_t budget = 400 * (samples + 1);
    for (std::size_t trial = 0; trial < budget && report.checked < samples; ++trial) {
        Point a;
        for (int i = 0; i < n; ++i) a.push_back(small_gauss(rng));
        if (g.det_q().evaluate(a).is_zero()) continue;
        Point ga = g.apply(a);
        SubspacePoint at_a = subspace_point(basis, a);
        PlueckerPoint via_map = plucker_point(basis, ga);
        PlueckerPoint via_tau = tau_apply(nu, at_a).plucker;
        ++report.checked;
        if (!(via_map == via_tau)) {
            report.all_equal = false;
            report.witnesses.push_back({std::move(a), std::move(via_map), std::move(via_tau)});
        }
    }
    if (report.checked < samples)
        throw SamplingExhausted("could not collect enough regular sample points");
    return report;
}

}  // namespace holreg
