#include "holreg/manifold.hpp"

#include <set>
#include <stdexcept>

#include "holreg/errors.hpp"
#include "holreg/rng.hpp"

namespace holreg {

HermitianFormTuple::HermitianFormTuple(int n, std::vector<QiMatrix> matrices)
    : n_(n), matrices_(std::move(matrices)) {
    if (n < 1) throw std::invalid_argument("form needs at least one z variable");
    if (matrices_.empty()) throw std::invalid_argument("form needs at least one component");
    for (const QiMatrix& h : matrices_) {
        if (h.rows() != static_cast<std::size_t>(n) || h.cols() != static_cast<std::size_t>(n))
            throw std::invalid_argument("form matrix has wrong shape");
        for (std::size_t a = 0; a < h.rows(); ++a)
            for (std::size_t b = 0; b < h.cols(); ++b)
                if (h.at(a, b) != h.at(b, a).conj())
                    throw std::invalid_argument("form matrix is not Hermitian");
    }
}

GaussRational HermitianFormTuple::value(int j, const std::vector<GaussRational>& z,
                                        const std::vector<GaussRational>& zp) const {
    if (z.size() != static_cast<std::size_t>(n_) || zp.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("form argument dimension mismatch");
    const QiMatrix& h = matrix(j);
    GaussRational acc;
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = 0; b < z.size(); ++b) acc += zp[a].conj() * h.at(a, b) * z[b];
    return acc;
}

NondegeneracyReport check_hermitian_nondegenerate(const HermitianFormTuple& form) {
    const int n = form.n(), k = form.k();
    // Independence over R: realify each matrix into a rational row.
    QiMatrix flat(static_cast<std::size_t>(k), static_cast<std::size_t>(2 * n * n));
    for (int j = 0; j < k; ++j)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const GaussRational& e = form.matrix(j).at(static_cast<std::size_t>(a),
                                                           static_cast<std::size_t>(b));
                flat.at(static_cast<std::size_t>(j), static_cast<std::size_t>(a * n + b)) =
                    GaussRational(e.re);
                flat.at(static_cast<std::size_t>(j), static_cast<std::size_t>(n * n + a * n + b)) =
                    GaussRational(e.im);
            }
    bool independent = rank(flat) == static_cast<std::size_t>(k);
    // Joint kernel: stack the matrices.
    QiMatrix stacked(static_cast<std::size_t>(k * n), static_cast<std::size_t>(n));
    for (int j = 0; j < k; ++j)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                stacked.at(static_cast<std::size_t>(j * n + a), static_cast<std::size_t>(b)) =
                    form.matrix(j).at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    bool trivial = rank(stacked) == static_cast<std::size_t>(n);
    return {independent, trivial};
}

TubeSpec::TubeSpec(int n_in, MultiPoly rho_in, int monic_var_in, bool allow_inhomogeneous)
    : n(n_in), rho(std::move(rho_in)), monic_var(monic_var_in) {
    if (n < 1) throw std::invalid_argument("tube needs at least one variable");
    if (rho.nvars() != n) throw std::invalid_argument("rho ring does not match tube dimension");
    if (rho.is_zero()) throw std::invalid_argument("rho is zero");
    if (!rho.has_real_coeffs()) throw std::invalid_argument("rho must have real coefficients");
    if (monic_var < 0 || monic_var >= n) throw std::invalid_argument("monic variable out of range");
    if (rho.degree_in(monic_var) != 2)
        throw std::invalid_argument("rho must be quadratic in the monic variable");
    Exponents top(static_cast<std::size_t>(n), 0);
    top[static_cast<std::size_t>(monic_var)] = 2;
    for (const auto& [e, c] : rho.terms())
        if (e[static_cast<std::size_t>(monic_var)] == 2 && e != top)
            throw std::invalid_argument("top coefficient in the monic variable is not constant");
    if (rho.coeff(top).is_zero())
        throw std::invalid_argument("top coefficient in the monic variable is not constant");
    homogeneous = rho.is_homogeneous(2);
    if (!homogeneous && !allow_inhomogeneous)
        throw std::invalid_argument("rho must be homogeneous quadratic");
}

int ManifoldSpec::ambient_dim() const {
    return is_quadric() ? quadric().ambient_dim() : tube().ambient_dim();
}

namespace {

// Quadric residual ring layout: x_0..x_{n-1}, y_0..y_{n-1}, u_0..u_{k-1}.
struct QuadricRing {
    int n, k;
    int nvars() const { return 2 * n + k; }
    MultiPoly x(int a) const { return MultiPoly::variable(nvars(), a); }
    MultiPoly y(int a) const { return MultiPoly::variable(nvars(), n + a); }
    MultiPoly u(int l) const { return MultiPoly::variable(nvars(), 2 * n + l); }
    MultiPoly z(int a) const { return x(a) + y(a).scaled(GaussRational::i()); }
    MultiPoly zbar(int a) const { return x(a) - y(a).scaled(GaussRational::i()); }
};

// h_j(v, z) = sum_{a,b} conj(z_a) (H_j)_{ab} v_b in the real ring, where v
// is any polynomial vector and z carries the substitution z = x + iy.
MultiPoly form_applied(const QuadricRing& ring, const QiMatrix& h,
                       const std::vector<MultiPoly>& v) {
    MultiPoly acc(ring.nvars());
    for (int a = 0; a < ring.n; ++a) {
        MultiPoly zb = ring.zbar(a);
        for (int b = 0; b < ring.n; ++b) {
            const GaussRational& c = h.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            if (c.is_zero() || v[static_cast<std::size_t>(b)].is_zero()) continue;
            acc += zb.scaled(c) * v[static_cast<std::size_t>(b)];
        }
    }
    return acc;
}

std::vector<MultiPoly> quadric_residual(const QuadricSpec& q, const PolyVectorField& xi) {
    const int n = q.n(), k = q.k();
    QuadricRing ring{n, k};
    // Substitution images for the ambient variables z_0..z_{n-1}, w_0..w_{k-1}
    // restricted to the quadric: w_l = u_l + i h_l(z, z).
    std::vector<MultiPoly> images;
    images.reserve(static_cast<std::size_t>(n + k));
    for (int a = 0; a < n; ++a) images.push_back(ring.z(a));
    std::vector<MultiPoly> zvars;
    for (int a = 0; a < n; ++a) zvars.push_back(ring.z(a));
    for (int l = 0; l < k; ++l) {
        MultiPoly hval = form_applied(ring, q.form.matrix(l), zvars);
        images.push_back(ring.u(l) + hval.scaled(GaussRational::i()));
    }
    // Field components on the quadric.
    std::vector<MultiPoly> f, g;
    for (int a = 0; a < n; ++a) f.push_back(xi.component(a).substitute(images));
    for (int l = 0; l < k; ++l) g.push_back(xi.component(n + l).substitute(images));
    // Residual_j = Im g_j - 2 Re h_j(f, z); Re and Im act coefficientwise
    // because all remaining variables are real.
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) {
        MultiPoly hf = form_applied(ring, q.form.matrix(l), f);
        out.push_back(g[static_cast<std::size_t>(l)].im_part() -
                      hf.re_part().scaled(GaussRational(2)));
    }
    return out;
}

// Tube residual ring layout: x_0..x_{n-1}, y_0..y_{n-1}.
std::vector<MultiPoly> tube_residual(const TubeSpec& t, const PolyVectorField& xi) {
    const int n = t.n;
    const int nv = 2 * n;
    std::vector<MultiPoly> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        images.push_back(MultiPoly::variable(nv, a) +
                         MultiPoly::variable(nv, n + a).scaled(GaussRational::i()));
    // Lift rho(x) into the doubled ring.
    std::vector<MultiPoly> xonly;
    for (int a = 0; a < n; ++a) xonly.push_back(MultiPoly::variable(nv, a));
    MultiPoly rho2 = t.rho.substitute(xonly);
    MultiPoly acc(nv);
    for (int a = 0; a < n; ++a) {
        MultiPoly d = t.rho.partial_derivative(a).substitute(xonly);
        if (d.is_zero()) continue;
        acc += d * xi.component(a).substitute(images).re_part();
    }
    return {poly_reduce_mod(acc, rho2, t.monic_var)};
}

}  // namespace

std::vector<MultiPoly> tangency_residual(const ManifoldSpec& m, const PolyVectorField& xi) {
    if (xi.dim() != m.ambient_dim())
        throw std::invalid_argument("field dimension does not match ambient space");
    return m.is_quadric() ? quadric_residual(m.quadric(), xi) : tube_residual(m.tube(), xi);
}

bool is_tangent(const ManifoldSpec& m, const PolyVectorField& xi) {
    for (const MultiPoly& r : tangency_residual(m, xi))
        if (!r.is_zero()) return false;
    return true;
}

bool membership(const ManifoldSpec& m, const Point& p) {
    if (static_cast<int>(p.size()) != m.ambient_dim())
        throw std::invalid_argument("point dimension does not match ambient space");
    if (m.is_quadric()) {
        const QuadricSpec& q = m.quadric();
        std::vector<GaussRational> z(p.begin(), p.begin() + q.n());
        for (int l = 0; l < q.k(); ++l) {
            const GaussRational& w = p[static_cast<std::size_t>(q.n() + l)];
            GaussRational h = q.form.value(l, z, z);
            // h is real for Hermitian forms; Im w must equal it.
            if (GaussRational(w.im) != h) return false;
        }
        return true;
    }
    const TubeSpec& t = m.tube();
    std::vector<GaussRational> re;
    re.reserve(p.size());
    for (const GaussRational& c : p) re.emplace_back(c.re);
    return t.rho.evaluate(re).is_zero();
}

Point quadric_point(const QuadricSpec& q, const std::vector<GaussRational>& z,
                    const std::vector<Rational>& u) {
    if (z.size() != static_cast<std::size_t>(q.n()) || u.size() != static_cast<std::size_t>(q.k()))
        throw std::invalid_argument("coordinate block sizes do not match the quadric");
    Point p = z;
    for (int l = 0; l < q.k(); ++l) {
        GaussRational h = q.form.value(l, z, z);
        p.emplace_back(u[static_cast<std::size_t>(l)], h.re);
    }
    return p;
}

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    if (q == 0) {
        root = 0;
        return true;
    }
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

// Solves rho = 0 for the monic variable over a random slice; returns true
// when the slice admits a rational root.
bool tube_base_point(const TubeSpec& t, SplitMix64& rng, std::vector<Rational>& x) {
    const int n = t.n;
    x.assign(static_cast<std::size_t>(n), Rational(0));
    for (int a = 0; a < n; ++a)
        if (a != t.monic_var) x[static_cast<std::size_t>(a)] = small_rational(rng);
    // rho = c v^2 + b v + a on the slice.
    Rational c2, c1, c0;
    for (const auto& [e, coeff] : t.rho.terms()) {
        Rational val = coeff.re;
        for (int a = 0; a < n; ++a) {
            if (a == t.monic_var) continue;
            for (int rep = 0; rep < e[static_cast<std::size_t>(a)]; ++rep)
                val *= x[static_cast<std::size_t>(a)];
        }
        switch (e[static_cast<std::size_t>(t.monic_var)]) {
            case 0: c0 += val; break;
            case 1: c1 += val; break;
            case 2: c2 += val; break;
            default: return false;
        }
    }
    Rational disc = c1 * c1 - 4 * c2 * c0;
    Rational root;
    if (!rational_sqrt(disc, root)) return false;
    bool plus = rng.below(2) == 0;
    x[static_cast<std::size_t>(t.monic_var)] = (-c1 + (plus ? root : -root)) / (2 * c2);
    return true;
}

}  // namespace

std::vector<Point> sample_points(const ManifoldSpec& m, std::size_t count, std::uint64_t seed,
                                 std::size_t budget) {
    SplitMix64 rng(seed);
    std::set<std::vector<std::pair<std::string, std::string>>> seen;
    auto key_of = [](const Point& p) {
        std::vector<std::pair<std::string, std::string>> key;
        key.reserve(p.size());
        for (const GaussRational& c : p)
            key.emplace_back(rational_to_string(c.re), rational_to_string(c.im));
        return key;
    };
    std::vector<Point> out;
    for (std::size_t trial = 0; trial < budget && out.size() < count; ++trial) {
        Point p;
        if (m.is_quadric()) {
            const QuadricSpec& q = m.quadric();
            std::vector<GaussRational> z;
            for (int a = 0; a < q.n(); ++a) z.push_back(small_gauss(rng));
            std::vector<Rational> u;
            for (int l = 0; l < q.k(); ++l) u.push_back(small_rational(rng));
            p = quadric_point(q, z, u);
        } else {
            const TubeSpec& t = m.tube();
            std::vector<Rational> x;
            if (!tube_base_point(t, rng, x)) continue;
            for (int a = 0; a < t.n; ++a)
                p.emplace_back(x[static_cast<std::size_t>(a)], small_rational(rng));
        }
        if (!membership(m, p)) throw std::logic_error("sampled point fails membership");
        if (seen.insert(key_of(p)).second) out.push_back(std::move(p));
    }
    if (out.size() < count)
        throw SamplingExhausted("could not sample " + std::to_string(count) +
                                " points within budget");
    return out;
}

TubeConditionReport check_tube_conditions(const TubeSpec& t, std::uint64_t seed,
                                          std::size_t budget) {
    const int n = t.n;
    // Affine spanning: find n + 1 affinely independent points of F.
    SplitMix64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    QiMatrix diffs(0, 0);
    std::vector<Rational> base;
    bool have_base = false;
    bool spans = false;
    for (std::size_t trial = 0; trial < budget && !spans; ++trial) {
        std::vector<Rational> x;
        if (!tube_base_point(t, rng, x)) continue;
        if (!have_base) {
            base = x;
            have_base = true;
            continue;
        }
        std::vector<GaussRational> diff;
        diff.reserve(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            diff.emplace_back(x[static_cast<std::size_t>(a)] - base[static_cast<std::size_t>(a)]);
        if (diffs.rows() == 0)
            diffs = QiMatrix::from_rows({diff});
        else
            diffs.append_row(diff);
        if (rank(diffs) == static_cast<std::size_t>(n)) spans = true;
    }
    if (!spans)
        throw SamplingExhausted("could not witness affine spanning of the cone within budget");
    // Tangent constants, decided exactly: kernel of c -> grad rho . c mod rho.
    std::vector<MultiPoly> reduced;
    for (int a = 0; a < n; ++a)
        reduced.push_back(poly_reduce_mod(t.rho.partial_derivative(a), t.rho, t.monic_var));
    std::map<Exponents, std::size_t, GradedLexLess> rows;
    for (const MultiPoly& r : reduced)
        for (const auto& [e, c] : r.terms()) rows.emplace(e, 0);
    std::size_t idx = 0;
    for (auto& [e, slot] : rows) slot = idx++;
    QiMatrix sys(rows.empty() ? 1 : rows.size(), static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (const auto& [e, c] : reduced[static_cast<std::size_t>(a)].terms())
            sys.at(rows.at(e), static_cast<std::size_t>(a)) = c;
    bool no_tangent = kernel_basis(sys).rows() == 0;
    return {spans, no_tangent};
}

}  // namespace holreg
