#include "holreg/birational.hpp"

#include <stdexcept>

#include "holreg/errors.hpp"
#include "holreg/rng.hpp"

namespace holreg {

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("mixed polynomial rings");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.nvars(), GaussRational(1));
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_divide_exact(num_, g);
        den_ = poly_divide_exact(den_, g);
    }
    GaussRational lc = den_.leading_term().second;
    if (lc != GaussRational(1)) {
        GaussRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    // Cross-reduce before multiplying to keep intermediate degrees down.
    MultiPoly g1 = poly_gcd(num_, o.den_);
    MultiPoly g2 = poly_gcd(o.num_, den_);
    MultiPoly n1 = g1.is_constant() ? num_ : poly_divide_exact(num_, g1);
    MultiPoly d2 = g1.is_constant() ? o.den_ : poly_divide_exact(o.den_, g1);
    MultiPoly n2 = g2.is_constant() ? o.num_ : poly_divide_exact(o.num_, g2);
    MultiPoly d1 = g2.is_constant() ? den_ : poly_divide_exact(den_, g2);
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
    return *this * RatFun(o.den_, o.num_);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::derivative(int var) const {
    // (n/d)' = (n' d - n d') / d^2; the constructor reduces.
    MultiPoly n = num_.partial_derivative(var) * den_ - num_ * den_.partial_derivative(var);
    return RatFun(std::move(n), den_ * den_);
}

GaussRational RatFun::evaluate(const std::vector<GaussRational>& point) const {
    GaussRational d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("rational function pole at evaluation point");
    return num_.evaluate(point) * d.inverse();
}

std::string RatFun::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFun poly_apply_ratfun(const MultiPoly& p, const std::vector<RatFun>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitution needs one image per variable");
    const int target = images.front().nvars();
    RatFun acc = RatFun::from_poly(MultiPoly::zero(target));
    std::vector<std::vector<RatFun>> powers(images.size());
    auto power = [&](std::size_t v, int e) -> const RatFun& {
        auto& row = powers[v];
        if (row.empty()) row.push_back(RatFun::from_poly(MultiPoly::constant(target, GaussRational(1))));
        while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * images[v]);
        return row[static_cast<std::size_t>(e)];
    };
    for (const auto& [e, c] : p.terms()) {
        RatFun term = RatFun::from_poly(MultiPoly::constant(target, c));
        for (std::size_t v = 0; v < images.size(); ++v)
            if (e[v] > 0) term = term * power(v, e[v]);
        acc = acc + term;
    }
    return acc;
}

PQPair pullback_pq(const std::vector<RatFun>& g) {
    if (g.empty()) throw std::invalid_argument("empty map");
    const int n = static_cast<int>(g.size());
    for (const RatFun& c : g)
        if (c.nvars() != n) throw std::invalid_argument("map component ring mismatch");

    // Common denominator D and numerators A with g = A / D.
    MultiPoly d = MultiPoly::constant(n, GaussRational(1));
    for (const RatFun& c : g) d = poly_lcm(d, c.den());
    std::vector<MultiPoly> a;
    a.reserve(g.size());
    for (const RatFun& c : g) a.push_back(c.num() * poly_divide_exact(d, c.den()));

    // W = D^2 * Jacobian(g), entrywise polynomial by the quotient rule.
    PolyMatrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(n), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                a[static_cast<std::size_t>(i)].partial_derivative(j) * d -
                a[static_cast<std::size_t>(i)] * d.partial_derivative(j);

    AdjugateResult adj = poly_adjugate(w);
    if (adj.det.is_zero()) throw std::invalid_argument("map has identically singular derivative");

    // q = (g')^{-1} = D^2 W^{-1} = D^2 adj(W) / det(W).
    MultiPoly d2 = d * d;
    PolyMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly num = d2 * adj.adjugate.at(static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j));
            MultiPoly entry(n);
            if (!poly_try_divide(num, adj.det, &entry)) {
                RatFun reduced(num, adj.det);
                throw NonPolynomial("q[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                    reduced.to_string());
            }
            q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(entry);
        }

    // p = q g = (q A) / D, again entrywise polynomial for a birational map.
    std::vector<MultiPoly> p;
    p.reserve(g.size());
    std::vector<MultiPoly> qa = q.apply(a);
    for (int i = 0; i < n; ++i) {
        MultiPoly entry(n);
        if (!poly_try_divide(qa[static_cast<std::size_t>(i)], d, &entry)) {
            RatFun reduced(qa[static_cast<std::size_t>(i)], d);
            throw NonPolynomial("p[" + std::to_string(i) + "]", reduced.to_string());
        }
        p.push_back(std::move(entry));
    }
    return {std::move(p), std::move(q)};
}

RationalMapQP::RationalMapQP(std::vector<MultiPoly> p, PolyMatrix q,
                             std::shared_ptr<const RationalMapQP> inverse)
    : p_(std::move(p)), q_(std::move(q)), det_q_(1), inverse_(std::move(inverse)) {
    const std::size_t n = p_.size();
    if (n == 0) throw std::invalid_argument("empty map");
    if (q_.rows() != n || q_.cols() != n) throw std::invalid_argument("q shape mismatch");
    for (const MultiPoly& c : p_)
        if (c.nvars() != static_cast<int>(n)) throw std::invalid_argument("p ring mismatch");
    if (q_.nvars() != static_cast<int>(n)) throw std::invalid_argument("q ring mismatch");
    det_q_ = poly_det(q_);
    if (det_q_.is_zero()) throw std::invalid_argument("det q vanishes identically");
    if (inverse_ && inverse_->n() != static_cast<int>(n))
        throw std::invalid_argument("inverse dimension mismatch");
}

std::vector<RatFun> RationalMapQP::rational_components() const {
    AdjugateResult adj = poly_adjugate(q_);
    std::vector<MultiPoly> num = adj.adjugate.apply(p_);
    std::vector<RatFun> out;
    out.reserve(p_.size());
    for (MultiPoly& c : num) out.emplace_back(std::move(c), adj.det);
    return out;
}

MultiPoly RationalMapQP::exact_denominator() const {
    MultiPoly l = MultiPoly::constant(n(), GaussRational(1));
    for (const RatFun& c : rational_components()) l = poly_lcm(l, c.den());
    return l;
}

Point RationalMapQP::apply(const Point& z) const {
    if (static_cast<int>(z.size()) != n()) throw std::invalid_argument("point dimension mismatch");
    if (det_q_.evaluate(z).is_zero())
        throw std::domain_error("point lies outside the regular set");
    QiMatrix qz = QiMatrix::from_rows(q_.evaluate(z));
    std::vector<GaussRational> pz;
    pz.reserve(p_.size());
    for (const MultiPoly& c : p_) pz.push_back(c.evaluate(z));
    auto sol = solve_vector(qz, pz);
    if (!sol) throw std::logic_error("q(z) singular despite nonzero determinant");
    return *sol;
}

RationalMapQP identity_map(int n) {
    std::vector<MultiPoly> p;
    for (int i = 0; i < n; ++i) p.push_back(MultiPoly::variable(n, i));
    auto self = std::make_shared<RationalMapQP>(p, PolyMatrix::identity(static_cast<std::size_t>(n), n));
    return RationalMapQP(std::move(p), PolyMatrix::identity(static_cast<std::size_t>(n), n), self);
}

RationalMapQP reconstruct_from_pq(std::vector<MultiPoly> p, PolyMatrix q,
                                  std::shared_ptr<const RationalMapQP> inverse,
                                  std::size_t sample_count, std::uint64_t seed) {
    RationalMapQP g(std::move(p), std::move(q), std::move(inverse));
    std::vector<RatFun> comps = g.rational_components();
    const int n = g.n();
    SplitMix64 rng(seed);
    std::size_t found = 0, budget = 200 * sample_count + 200;
    for (std::size_t trial = 0; trial < budget && found < sample_count; ++trial) {
        Point z;
        for (int i = 0; i < n; ++i) z.push_back(small_gauss(rng));
        if (g.det_q().evaluate(z).is_zero()) continue;
        // Denominators of reduced components divide det q, so they are
        // nonzero here and the Jacobian evaluates cleanly.
        QiMatrix jac(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                jac.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    comps[static_cast<std::size_t>(i)].derivative(j).evaluate(z);
        QiMatrix qz = QiMatrix::from_rows(g.q().evaluate(z));
        QiMatrix prod = jac * qz;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const GaussRational want = (i == j) ? GaussRational(1) : GaussRational(0);
                if (prod.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != want)
                    throw std::invalid_argument(
                        "derivative identity fails: (g' q) != id at sampled point, entry (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
            }
        ++found;
    }
    if (found < sample_count)
        throw SamplingExhausted("could not find enough regular sample points");
    return g;
}

namespace {

RationalMapQP compose_impl(const RationalMapQP& g1, const RationalMapQP& g2, bool with_inverse) {
    if (g1.n() != g2.n()) throw std::invalid_argument("composition dimension mismatch");
    std::vector<RatFun> inner = g2.rational_components();
    std::vector<RatFun> composed;
    composed.reserve(static_cast<std::size_t>(g1.n()));
    for (const RatFun& c : g1.rational_components()) {
        RatFun num = poly_apply_ratfun(c.num(), inner);
        RatFun den = poly_apply_ratfun(c.den(), inner);
        if (den.is_zero())
            throw std::invalid_argument("composition denominator vanishes identically");
        composed.push_back(num / den);
    }
    PQPair pq = pullback_pq(composed);
    std::shared_ptr<const RationalMapQP> inv;
    if (with_inverse && g1.inverse() && g2.inverse())
        inv = std::make_shared<RationalMapQP>(compose_impl(*g2.inverse(), *g1.inverse(), false));
    return RationalMapQP(std::move(pq.p), std::move(pq.q), std::move(inv));
}

}  // namespace

RationalMapQP compose(const RationalMapQP& g1, const RationalMapQP& g2) {
    return compose_impl(g1, g2, true);
}

OrbitReport orbit_consistency(const ManifoldSpec& m, const RationalMapQP& g, std::size_t samples,
                              std::uint64_t seed) {
    if (m.ambient_dim() != g.n())
        throw std::invalid_argument("map dimension does not match the manifold");
    OrbitReport report;
    std::size_t budget = 400 * (samples + 1);
    SplitMix64 outer(seed);
    std::size_t used = 0;
    for (std::size_t trial = 0; trial < budget && report.checked < samples; ++trial) {
        // Draw fresh seeded manifold points one at a time, skipping those
        // outside the regular set of g.
        std::vector<Point> pts;
        try {
            pts = sample_points(m, used + 1, seed, budget);
        } catch (const SamplingExhausted&) {
            break;
        }
        Point z = pts.back();
        ++used;
        if (g.det_q().evaluate(z).is_zero()) continue;
        Point image = g.apply(z);
        bool on = membership(m, image);
        ++report.checked;
        if (!on) {
            report.consistent = false;
            report.witnesses.push_back(OrbitWitness{z, image, true, false});
        }
    }
    if (report.checked < samples)
        throw SamplingExhausted("could not collect enough regular sample points on the manifold");
    return report;
}

}  // namespace holreg
