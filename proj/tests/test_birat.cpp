#include <doctest.h>

#include <memory>

#include "holreg/birational.hpp"
#include "holreg/errors.hpp"
#include "holreg/poly_matrix.hpp"

using namespace holreg;

namespace {

ManifoldSpec heisenberg() {
    QiMatrix h(1, 1);
    h.at(0, 0) = GaussRational(1);
    return ManifoldSpec(QuadricSpec{HermitianFormTuple(1, {h})});
}

RationalMapQP heisenberg_inversion() {
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    PolyMatrix qinv(2, 2, 2);
    qinv.at(0, 0) = -w;
    qinv.at(0, 1) = z * w;
    qinv.at(1, 1) = w * w;
    auto inv = std::make_shared<RationalMapQP>(
        reconstruct_from_pq({MultiPoly::zero(2), -w}, qinv));
    PolyMatrix q(2, 2, 2);
    q.at(0, 0) = w;
    q.at(0, 1) = z * w;
    q.at(1, 1) = w * w;
    return reconstruct_from_pq({MultiPoly::zero(2), -w}, q, inv);
}

RationalMapQP heisenberg_translation() {
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    MultiPoly one = MultiPoly::constant(2, GaussRational(1));
    GaussRational two_i(Rational(0), Rational(2)), mi(Rational(0), Rational(-1));
    PolyMatrix qinv(2, 2, 2);
    qinv.at(0, 0) = one;
    qinv.at(1, 0) = one.scaled(two_i);
    qinv.at(1, 1) = one;
    auto inv = std::make_shared<RationalMapQP>(
        reconstruct_from_pq({z - one, w + one.scaled(mi)}, qinv));
    PolyMatrix q(2, 2, 2);
    q.at(0, 0) = one;
    q.at(1, 0) = one.scaled(-two_i);
    q.at(1, 1) = one;
    return reconstruct_from_pq({z + one, w + one.scaled(mi)}, q, inv);
}

// Entries of the 2x2 polynomial matrix product a * b.
PolyMatrix pmul(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.rows(), b.cols(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            MultiPoly acc(a.nvars());
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

}  // namespace

TEST_CASE("rational functions hold their reduced normal form") {
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly one = MultiPoly::constant(1, GaussRational(1));

    RatFun r(z * z - one, z - one);
    CHECK(r.num() == z + one);
    CHECK(r.den() == one);
    CHECK(r.is_polynomial());

    RatFun s(z.scaled(GaussRational(2)), (z * z).scaled(GaussRational(4)));
    CHECK(s.num() == one.scaled(GaussRational(Rational(1, 2))));
    CHECK(s.den() == z);

    CHECK_THROWS_AS(RatFun(one, MultiPoly::zero(1)), std::domain_error);
    CHECK_THROWS_AS(RatFun(one, z) / RatFun(MultiPoly::zero(1), one), std::domain_error);
    CHECK_THROWS_AS(RatFun(one, z).evaluate({GaussRational()}), std::domain_error);

    // d/dz (1/z) = -1/z^2.
    RatFun d = RatFun(one, z).derivative(0);
    CHECK(d.num() == -one);
    CHECK(d.den() == z * z);

    RatFun sum = RatFun(one, z) + RatFun(one, z + one);
    CHECK(sum.num() == z + z + one);
    CHECK(sum.den() == z * (z + one));
}

TEST_CASE("inversion normal form freezes") {
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    MultiPoly one = MultiPoly::constant(2, GaussRational(1));
    PQPair pq = pullback_pq({RatFun(z, w), RatFun(-one, w)});
    CHECK(pq.p[0].is_zero());
    CHECK(pq.p[1] == -w);
    CHECK(pq.q.at(0, 0) == w);
    CHECK(pq.q.at(0, 1) == z * w);
    CHECK(pq.q.at(1, 0).is_zero());
    CHECK(pq.q.at(1, 1) == w * w);

    RationalMapQP g = heisenberg_inversion();
    CHECK(g.det_q() == w * w * w);
    auto comp = g.rational_components();
    CHECK(comp[0] == RatFun(z, w));
    CHECK(comp[1] == RatFun(-one, w));
    CHECK(g.exact_denominator() == w);

    Point image = g.apply({GaussRational(3), GaussRational(2)});
    CHECK(image[0] == GaussRational(Rational(3, 2)));
    CHECK(image[1] == GaussRational(Rational(-1, 2)));
    CHECK_THROWS_AS(g.apply({GaussRational(1), GaussRational()}), std::domain_error);
}

TEST_CASE("scalar cremona map: denominators and involution") {
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly one = MultiPoly::constant(1, GaussRational(1));
    // g(z) = z / (1 - z).
    PQPair pq = pullback_pq({RatFun(z, one - z)});
    CHECK(pq.p[0] == z * (one - z));
    CHECK(pq.q.at(0, 0) == (one - z) * (one - z));

    auto inv = std::make_shared<RationalMapQP>(
        reconstruct_from_pq({z * (one + z)}, [&] {
            PolyMatrix qi(1, 1, 1);
            qi.at(0, 0) = (one + z) * (one + z);
            return qi;
        }()));
    RationalMapQP g = reconstruct_from_pq(std::move(pq.p), std::move(pq.q), inv);

    // det q = (1-z)^2 while the exact denominator is only z - 1.
    CHECK(g.exact_denominator() == z - one);
    auto [quo, rem] = poly_divide(g.det_q(), g.exact_denominator());
    CHECK(rem.is_zero());
    CHECK(quo.degree() == 1);

    RationalMapQP id = compose(*inv, g);
    CHECK(id.rational_components()[0] == RatFun::from_poly(z));
    CHECK(id.p()[0] == z);
    CHECK(id.q().at(0, 0) == one);
}

TEST_CASE("matrix cremona map freezes its (p, q) pair") {
    // E = C^{2x2} flattened row-major, b = [[1,2],[0,1]], g(z) = (1-zb)^{-1} z.
    const int N = 4;
    PolyMatrix zm(2, 2, N), bm(2, 2, N), eye(2, 2, N);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) zm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            MultiPoly::variable(N, 2 * i + j);
    bm.at(0, 0) = MultiPoly::constant(N, GaussRational(1));
    bm.at(0, 1) = MultiPoly::constant(N, GaussRational(2));
    bm.at(1, 1) = MultiPoly::constant(N, GaussRational(1));
    eye.at(0, 0) = MultiPoly::constant(N, GaussRational(1));
    eye.at(1, 1) = MultiPoly::constant(N, GaussRational(1));

    PolyMatrix one_zb = eye, one_bz = eye;
    PolyMatrix zb = pmul(zm, bm), bz = pmul(bm, zm);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            one_zb.at(i, j) = one_zb.at(i, j) - zb.at(i, j);
            one_bz.at(i, j) = one_bz.at(i, j) - bz.at(i, j);
        }
    auto adj = poly_adjugate(one_zb);
    PolyMatrix num = pmul(adj.adjugate, zm);
    std::vector<RatFun> comps;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) comps.emplace_back(num.at(i, j), adj.det);

    PQPair pq = pullback_pq(comps);
    RationalMapQP g(pq.p, pq.q);

    // p = z - z b z.
    PolyMatrix zbz = pmul(zb, zm);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(pq.p[2 * i + j] == zm.at(i, j) - zbz.at(i, j));

    // q alpha = (1-zb) alpha (1-bz) for the four basis matrices.
    for (int k = 0; k < N; ++k) {
        PolyMatrix alpha(2, 2, N);
        alpha.at(static_cast<std::size_t>(k / 2), static_cast<std::size_t>(k % 2)) =
            MultiPoly::constant(N, GaussRational(1));
        PolyMatrix expect = pmul(pmul(one_zb, alpha), one_bz);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(pq.q.at(2 * i + j, static_cast<std::size_t>(k)) == expect.at(i, j));
    }

    // det q = det(1-zb)^2 det(1-bz)^2; the exact denominator is det(1-zb).
    auto adj_bz = poly_adjugate(one_bz);
    CHECK(g.det_q() == adj.det * adj.det * adj_bz.det * adj_bz.det);
    CHECK(g.exact_denominator() == poly_normalize(adj.det));
    CHECK(g.det_q().degree() == 8);
    CHECK(g.exact_denominator().degree() == 2);
}

TEST_CASE("reconstruction validates the derivative identity") {
    MultiPoly z = MultiPoly::variable(1, 0);
    PolyMatrix qok(1, 1, 1);
    qok.at(0, 0) = MultiPoly::constant(1, GaussRational(1));
    RationalMapQP ok = reconstruct_from_pq({z}, qok);
    CHECK(ok.p()[0] == z);

    PolyMatrix qbad = qok;
    try {
        reconstruct_from_pq({z * z}, qbad);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("derivative identity") != std::string::npos);
    }
}

TEST_CASE("roundtrip through rational components") {
    RationalMapQP g = heisenberg_inversion();
    auto comps = g.rational_components();
    PQPair pq = pullback_pq(comps);
    CHECK(pq.p == g.p());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(pq.q.at(i, j) == g.q().at(i, j));
}

TEST_CASE("composition matches the chain rule") {
    RationalMapQP g = heisenberg_inversion(), h = heisenberg_translation();
    RationalMapQP gh = compose(g, h);

    auto hc = h.rational_components();
    // q_{g o h}(z) = q_h(z) q_g(h(z)) and p_{g o h}(z) = q_h(z) p_g(h(z)).
    for (std::size_t i = 0; i < 2; ++i) {
        RatFun pexp = RatFun::from_poly(MultiPoly::zero(2));
        for (std::size_t k = 0; k < 2; ++k)
            pexp = pexp + RatFun::from_poly(h.q().at(i, k)) * poly_apply_ratfun(g.p()[k], hc);
        CHECK(RatFun::from_poly(gh.p()[i]) == pexp);
        for (std::size_t j = 0; j < 2; ++j) {
            RatFun qexp = RatFun::from_poly(MultiPoly::zero(2));
            for (std::size_t k = 0; k < 2; ++k)
                qexp = qexp +
                       RatFun::from_poly(h.q().at(i, k)) * poly_apply_ratfun(g.q().at(k, j), hc);
            CHECK(RatFun::from_poly(gh.q().at(i, j)) == qexp);
        }
    }

    // Inversion is an involution up to the central reflection (-z, w).
    RationalMapQP gg = compose(g, g);
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    auto comps = gg.rational_components();
    CHECK(comps[0] == RatFun::from_poly(-z));
    CHECK(comps[1] == RatFun::from_poly(w));

    // Composing with the attached inverse gives the identity map.
    RationalMapQP idm = compose(*g.inverse(), g);
    CHECK(idm.rational_components()[0] == RatFun::from_poly(z));
    CHECK(idm.rational_components()[1] == RatFun::from_poly(w));
}

TEST_CASE("degenerate inputs are rejected with witnesses") {
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly one = MultiPoly::constant(1, GaussRational(1));
    // Squaring is not birational: q would need entry 1/(2z).
    try {
        pullback_pq({RatFun::from_poly(z * z)});
        FAIL("expected NonPolynomial");
    } catch (const NonPolynomial& e) {
        CHECK(e.entry == "q[0][0]");
        CHECK(std::string(e.what()).find("non-polynomial") != std::string::npos);
    }

    // Identically singular Jacobian.
    MultiPoly z0 = MultiPoly::variable(2, 0);
    CHECK_THROWS_AS(pullback_pq({RatFun::from_poly(z0), RatFun::from_poly(z0)}),
                    std::invalid_argument);

    // det q identically zero is rejected at construction.
    PolyMatrix zq(1, 1, 1);
    CHECK_THROWS_AS(RationalMapQP({one}, zq), std::invalid_argument);
}

TEST_CASE("orbit consistency on the quadric") {
    ManifoldSpec m = heisenberg();
    OrbitReport inv_rep = orbit_consistency(m, heisenberg_inversion(), 10, 17);
    CHECK(inv_rep.consistent);
    CHECK(inv_rep.checked == 10);
    CHECK(inv_rep.witnesses.empty());
    CHECK(orbit_consistency(m, heisenberg_translation(), 10, 18).consistent);

    // (z, 2w) rescales Im w against h(z, z) and must fail with a witness.
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    PolyMatrix q(2, 2, 2);
    q.at(0, 0) = MultiPoly::constant(2, GaussRational(1));
    q.at(1, 1) = MultiPoly::constant(2, GaussRational(Rational(1, 2)));
    RationalMapQP bad = reconstruct_from_pq({z, w}, q);
    OrbitReport rep = orbit_consistency(m, bad, 6, 19);
    CHECK_FALSE(rep.consistent);
    REQUIRE(!rep.witnesses.empty());
    const OrbitWitness& wt = rep.witnesses.front();
    CHECK(wt.source_on_manifold);
    CHECK_FALSE(wt.image_on_manifold);
    CHECK(wt.image[1] == wt.source[1] * GaussRational(2));
}
