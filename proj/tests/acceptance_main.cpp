// Acceptance gate: reruns every advertised guarantee end to end and prints
// one PASS/FAIL line per criterion with its wall-clock budget. Exits

// nonzero when any criterion fails. The holreg binary path arrives as
// --cli=<path>; criteria that specify tool behavior shell out to it.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "holreg/birational.hpp"
#include "holreg/hol_solver.hpp"
#include "holreg/json_io.hpp"
#include "holreg/lie_structure.hpp"
#include "holreg/manifold.hpp"
#include "holreg/poly_gcd.hpp"
#include "holreg/poly_matrix.hpp"
#include "holreg/regularizer.hpp"
#include "holreg/rng.hpp"

using namespace holreg;

namespace {

std::string g_cli;
std::filesystem::path g_dir;

std::string put(const std::string& name, const std::string& text) {
    std::filesystem::path p = g_dir / name;
    std::ofstream(p) << text;
    return p.string();
}

struct CliResult {
    int exit_code;
    Json report;
};

CliResult run_cli(const std::string& args, const std::string& out_name) {
    std::string out = (g_dir / out_name).string();
    std::string cmd = g_cli + " " + args + " --out " + out + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    CliResult r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, Json()};
    std::ifstream in(out);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        r.report = Json::parse(buf.str(), nullptr, false);
    }
    return r;
}

// Failure collector: criteria append messages; empty means pass.
struct Check {
    std::ostringstream bad;

    void expect(bool ok, const std::string& msg) {
        if (!ok) bad << (bad.str().empty() ? "" : "; ") << msg;
    }
    std::string result() const { return bad.str(); }
};

// ------------------------------------------------------------ fixtures

ManifoldSpec heisenberg_spec() {
    QiMatrix h(1, 1);
    h.at(0, 0) = GaussRational(1);
    return ManifoldSpec(QuadricSpec{HermitianFormTuple(1, {h})});
}

ManifoldSpec light_cone_spec() {
    MultiPoly rho(3);
    rho.add_term({2, 0, 0}, GaussRational(1));
    rho.add_term({0, 2, 0}, GaussRational(1));
    rho.add_term({0, 0, 2}, GaussRational(-1));
    return ManifoldSpec(TubeSpec(3, std::move(rho), 2));
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

RationalMapQP heisenberg_dilation() {
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    PolyMatrix qinv(2, 2, 2);
    qinv.at(0, 0) = MultiPoly::constant(2, GaussRational(2));
    qinv.at(1, 1) = MultiPoly::constant(2, GaussRational(4));
    auto inv = std::make_shared<RationalMapQP>(reconstruct_from_pq({z, w}, qinv));
    PolyMatrix q(2, 2, 2);
    q.at(0, 0) = MultiPoly::constant(2, GaussRational(Rational(1, 2)));
    q.at(1, 1) = MultiPoly::constant(2, GaussRational(Rational(1, 4)));
    return reconstruct_from_pq({z, w}, q, inv);
}

// Quadric affine family element (z, w) -> (z + a, w + 2i conj(a) z + i|a|^2 + s)
// with real s; normalized pair p = (z + a, w - i|a|^2 + s), q = [[1,0],[-2i conj(a),1]].
RationalMapQP quadric_affine(const GaussRational& a, const Rational& s, bool with_inverse = true) {
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    GaussRational two_i_abar = GaussRational(Rational(0), Rational(2)) * a.conj();
    GaussRational shift(s, -a.norm());
    PolyMatrix q(2, 2, 2);
    q.at(0, 0) = MultiPoly::constant(2, GaussRational(1));
    q.at(1, 0) = MultiPoly::constant(2, -two_i_abar);
    q.at(1, 1) = MultiPoly::constant(2, GaussRational(1));
    std::vector<MultiPoly> p{z + MultiPoly::constant(2, a), w + MultiPoly::constant(2, shift)};
    std::shared_ptr<const RationalMapQP> inv;
    if (with_inverse)
        inv = std::make_shared<RationalMapQP>(quadric_affine(-a, -s, false));
    return reconstruct_from_pq(std::move(p), std::move(q), std::move(inv));
}

// Plain ambient translation (z, w) -> (z + 3, w + 2i).
RationalMapQP ambient_translation(bool with_inverse = true) {
    MultiPoly z = MultiPoly::variable(2, 0), w = MultiPoly::variable(2, 1);
    GaussRational a(3), b(Rational(0), Rational(2));
    if (!with_inverse) {
        a = -a;
        b = -b;
    }
    PolyMatrix q(2, 2, 2);
    q.at(0, 0) = MultiPoly::constant(2, GaussRational(1));
    q.at(1, 1) = MultiPoly::constant(2, GaussRational(1));
    std::vector<MultiPoly> p{z + MultiPoly::constant(2, a), w + MultiPoly::constant(2, b)};
    std::shared_ptr<const RationalMapQP> inv;
    if (with_inverse) inv = std::make_shared<RationalMapQP>(ambient_translation(false));
    return reconstruct_from_pq(std::move(p), std::move(q), std::move(inv));
}

LieAlgebraBasis sl2_toy() {
    MultiPoly z = MultiPoly::variable(1, 0);
    return LieAlgebraBasis{Ground::Complex,
                           1,
                           2,
                           {PolyVectorField::coordinate(1, 0), PolyVectorField({z}),
                            PolyVectorField({z * z})}};
}

RationalMapQP mobius_translation(const GaussRational& beta, bool with_inverse = true) {
    MultiPoly z = MultiPoly::variable(1, 0);
    PolyMatrix q(1, 1, 1);
    q.at(0, 0) = MultiPoly::constant(1, GaussRational(1));
    std::shared_ptr<const RationalMapQP> inv;
    if (with_inverse) inv = std::make_shared<RationalMapQP>(mobius_translation(-beta, false));
    return reconstruct_from_pq({z + MultiPoly::constant(1, beta)}, q, inv);
}

RationalMapQP mobius_inversion() {
    MultiPoly z = MultiPoly::variable(1, 0);
    PolyMatrix q(1, 1, 1);
    q.at(0, 0) = z * z;
    auto self = std::make_shared<RationalMapQP>(reconstruct_from_pq({-z}, q));
    PolyMatrix q2(1, 1, 1);
    q2.at(0, 0) = z * z;
    return reconstruct_from_pq({-z}, q2, self);
}

// ------------------------------------------------------------ helpers

// Projective comparison of Pluecker coordinate vectors.
bool proportional(const std::vector<GaussRational>& a, const std::vector<GaussRational>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] == a[j] * b[i])) return false;
    bool a_zero = true, b_zero = true;
    for (const GaussRational& x : a) a_zero = a_zero && x.is_zero();
    for (const GaussRational& x : b) b_zero = b_zero && x.is_zero();
    return a_zero == b_zero;
}

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

bool same_pq(const PQPair& got, const RationalMapQP& g) {
    if (got.p.size() != g.p().size()) return false;
    for (std::size_t i = 0; i < got.p.size(); ++i)
        if (!(got.p[i] == g.p()[i])) return false;
    for (std::size_t i = 0; i < got.q.rows(); ++i)
        for (std::size_t j = 0; j < got.q.cols(); ++j)
            if (!(got.q.at(i, j) == g.q().at(i, j))) return false;
    return true;
}

Json gauss_json(const GaussRational& x) {
    return Json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}

// Shared expensive intermediates, computed on first use.
struct Cache {
    std::unique_ptr<LieAlgebraBasis> heis_real, heis_cx, cone_real, cone_cx;

    const LieAlgebraBasis& heisenberg() {
        if (!heis_real)
            heis_real = std::make_unique<LieAlgebraBasis>(solve_hol(heisenberg_spec(), 2).basis);
        return *heis_real;
    }
    const LieAlgebraBasis& heisenberg_complex() {
        if (!heis_cx)
            heis_cx = std::make_unique<LieAlgebraBasis>(complexify(heisenberg()).complex_basis);
        return *heis_cx;
    }
    const LieAlgebraBasis& light_cone() {
        if (!cone_real)
            cone_real = std::make_unique<LieAlgebraBasis>(solve_hol(light_cone_spec(), 2).basis);
        return *cone_real;
    }
    const LieAlgebraBasis& light_cone_complex() {
        if (!cone_cx)
            cone_cx = std::make_unique<LieAlgebraBasis>(complexify(light_cone()).complex_basis);
        return *cone_cx;
    }
} cache;

// ------------------------------------------------------------ criteria

// Heisenberg quadric: dimension 8 at caps 2 and 3, totally real
// complexification of dimension 8, grading dims (2, 4, 2).
std::string criterion_1() {
    Check c;
    std::string heis = put("heis.json", R"({"type":"quadric","n":1,"k":1,"h":[[[1]]]})");
    CliResult d2 = run_cli("hol solve --manifold " + heis + " --degree 2", "c1_d2.json");
    c.expect(d2.exit_code == 0, "solve at degree 2 exited " + std::to_string(d2.exit_code));
    c.expect(d2.report["result"]["dim_real"] == 8, "degree 2 dimension != 8");
    CliResult d3 = run_cli("hol solve --manifold " + heis + " --degree 3", "c1_d3.json");
    c.expect(d3.report["result"]["dim_real"] == 8, "degree 3 dimension != 8");

    CliResult nd = run_cli("check nondegenerate --basis " + (g_dir / "c1_d2.json").string(),
                           "c1_nd.json");
    c.expect(nd.exit_code == 0 && nd.report["result"]["totally_real"] == true,
             "complexification is not totally real");
    c.expect(nd.report["result"]["dim_complex"] == 8, "complex dimension != 8");

    CliResult gr = run_cli("lie grade --basis " + (g_dir / "c1_d2.json").string(), "c1_gr.json");
    c.expect(gr.exit_code == 0, "grading exited " + std::to_string(gr.exit_code));
    const Json& parts = gr.report["result"]["grading"]["parts"];
    c.expect(parts.size() == 3 && parts[0]["m"] == -1 && parts[0]["dim"] == 2 &&
                 parts[1]["m"] == 0 && parts[1]["dim"] == 4 && parts[2]["m"] == 1 &&
                 parts[2]["dim"] == 2,
             "grading dims differ from (2, 4, 2) at m = (-1, 0, 1)");
    return c.result();
}

// Light-cone tube: dimension 10, grading dims (3, 4, 3), constants and
// Euler field present in the complex span.
std::string criterion_2() {
    Check c;
    std::string cone = put("cone.json",
                           R"({"type":"tube","n":3,"monic_var":2,
                               "rho":[{"c":1,"e":[2,0,0]},{"c":1,"e":[0,2,0]},{"c":"-1","e":[0,0,2]}]})");
    CliResult d2 = run_cli("hol solve --manifold " + cone + " --degree 2", "c2_d2.json");
    c.expect(d2.exit_code == 0, "solve exited " + std::to_string(d2.exit_code));
    c.expect(d2.report["result"]["dim_real"] == 10, "dimension != 10");

    CliResult gr = run_cli("lie grade --basis " + (g_dir / "c2_d2.json").string(), "c2_gr.json");
    const Json& parts = gr.report["result"]["grading"]["parts"];
    c.expect(gr.exit_code == 0 && parts.size() == 3 && parts[0]["m"] == -1 &&
                 parts[0]["dim"] == 3 && parts[1]["m"] == 0 && parts[1]["dim"] == 4 &&
                 parts[2]["m"] == 1 && parts[2]["dim"] == 3,
             "grading dims differ from (3, 4, 3)");

    CliResult pp = run_cli("check property-p --basis " + (g_dir / "c2_d2.json").string(),
                           "c2_pp.json");
    c.expect(pp.exit_code == 0 && pp.report["result"]["holds"] == true,
             "constants-and-euler check failed");
    return c.result();
}

// Sphere quadric n = 2: dimension 15.
std::string criterion_3() {
    Check c;
    std::string sphere = put("sphere.json",
                             R"({"type":"quadric","n":2,"k":1,"h":[[[1,0],[0,1]]]})");
    CliResult d2 = run_cli("hol solve --manifold " + sphere + " --degree 2", "c3_d2.json");
    c.expect(d2.exit_code == 0, "solve exited " + std::to_string(d2.exit_code));
    c.expect(d2.report["result"]["dim_real"] == 15, "dimension != 15");
    return c.result();
}

// Matrix Cremona map g(z) = (1 - zb)^{-1} z on 2x2 matrices with a random
// integer b: exact (p, q) and determinant identities.
std::string criterion_4() {
    Check c;
    const int N = 4;
    SplitMix64 rng(0xACCE97);
    PolyMatrix zm(2, 2, N), bm(2, 2, N), eye(2, 2, N);
    bool nonzero = false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            zm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                MultiPoly::variable(N, 2 * i + j);
            long entry = static_cast<long>(rng.below(7)) - 3;
            nonzero = nonzero || entry != 0;
            if (i == 1 && j == 1 && !nonzero) entry = 1;
            bm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                MultiPoly::constant(N, GaussRational(entry));
        }
    eye.at(0, 0) = MultiPoly::constant(N, GaussRational(1));
    eye.at(1, 1) = MultiPoly::constant(N, GaussRational(1));

    PolyMatrix one_zb = eye, one_bz = eye;
    PolyMatrix zb = pmul(zm, bm), bz = pmul(bm, zm);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            one_zb.at(i, j) = one_zb.at(i, j) - zb.at(i, j);
            one_bz.at(i, j) = one_bz.at(i, j) - bz.at(i, j);
        }
    AdjugateResult adj = poly_adjugate(one_zb);
    PolyMatrix num = pmul(adj.adjugate, zm);
    std::vector<RatFun> comps;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) comps.emplace_back(num.at(i, j), adj.det);
    PQPair pq = pullback_pq(comps);

    PolyMatrix zbz = pmul(zb, zm);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            c.expect(pq.p[2 * i + j] == zm.at(i, j) - zbz.at(i, j),
                     "p != z - zbz at entry " + std::to_string(2 * i + j));
    for (int k = 0; k < N; ++k) {
        PolyMatrix alpha(2, 2, N);
        alpha.at(static_cast<std::size_t>(k / 2), static_cast<std::size_t>(k % 2)) =
            MultiPoly::constant(N, GaussRational(1));
        PolyMatrix expect = pmul(pmul(one_zb, alpha), one_bz);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                c.expect(pq.q.at(2 * i + j, static_cast<std::size_t>(k)) == expect.at(i, j),
                         "q alpha != (1-zb) alpha (1-bz) at column " + std::to_string(k));
    }
    RationalMapQP g(pq.p, pq.q);
    AdjugateResult adj_bz = poly_adjugate(one_bz);
    c.expect(g.det_q() == adj.det * adj.det * adj_bz.det * adj_bz.det,
             "det q != det(1-zb)^2 det(1-bz)^2");
    return c.result();
}

// Normal-form roundtrips: pullback of the rational components reproduces
// (p, q) exactly and the derivative identity holds at sampled points, for
// ambient translations, the quadric affine family, and the inversion.
std::string criterion_5() {
    Check c;
    struct Named {
        std::string name;
        RationalMapQP map;
    };
    std::vector<Named> maps;
    maps.push_back({"translation", ambient_translation()});
    maps.push_back({"affine(1,0)", quadric_affine(GaussRational(1), Rational(0))});
    maps.push_back({"affine(i,2)", quadric_affine(GaussRational::i(), Rational(2))});
    maps.push_back({"inversion", heisenberg_inversion()});

    for (const Named& m : maps) {
        std::vector<RatFun> comps = m.map.rational_components();
        PQPair pq = pullback_pq(comps);
        c.expect(same_pq(pq, m.map), m.name + ": pullback does not reproduce (p, q)");
        try {
            // Validates q g' = 1 at 10 sampled regular points internally.
            RationalMapQP back = reconstruct_from_pq(pq.p, pq.q, m.map.inverse(), 10, 5);
            std::vector<RatFun> back_comps = back.rational_components();
            for (std::size_t i = 0; i < comps.size(); ++i)
                c.expect(back_comps[i] == comps[i],
                         m.name + ": reconstructed component " + std::to_string(i) + " differs");
        } catch (const std::exception& e) {
            c.expect(false, m.name + ": reconstruction failed: " + e.what());
        }
    }

    // The affine maps close as a family: the composite of two elements is
    // again quadric_affine(a + b, s) for a real shift s.
    RationalMapQP comp = compose(quadric_affine(GaussRational(1), Rational(0)),
                                 quadric_affine(GaussRational::i(), Rational(2)));
    GaussRational sum = GaussRational(1) + GaussRational::i();
    MultiPoly w = MultiPoly::variable(2, 1);
    MultiPoly shift = comp.p()[1] - w;
    c.expect(shift.degree() == 0, "family composite w-component is not w + constant");
    GaussRational gamma = shift.is_zero() ? GaussRational() : shift.terms().begin()->second;
    GaussRational sigma = gamma + GaussRational(Rational(0), sum.norm());
    c.expect(sigma.is_real(), "family composite shift is not real");
    if (sigma.is_real()) {
        RationalMapQP expected = quadric_affine(sum, sigma.re);
        c.expect(same_pq(PQPair{comp.p(), comp.q()}, expected),
                 "composite leaves the affine family");
    }
    return c.result();
}

// Regularization: the toy algebra embeds a as [a^2 : -a : 1] and
// intertwining holds for its translations and inversion; the quadric
// algebra embeds into P^27 with intertwining at 20 points per map.
std::string criterion_6() {
    Check c;
    LieAlgebraBasis sl2 = sl2_toy();
    for (const Rational& av : {Rational(2), Rational(-3), Rational(1, 2), Rational(0)}) {
        GaussRational a(av);
        SubspacePoint sp = subspace_point(sl2, {a});
        std::vector<GaussRational> expect{a * a, -a, GaussRational(1)};
        c.expect(proportional(sp.plucker.coords, expect),
                 "toy curve differs from [a^2 : -a : 1] at a = " + rational_to_string(av));
    }
    IntertwiningReport t1 = verify_intertwining(sl2, mobius_translation(GaussRational(2)), 20, 6);
    c.expect(t1.all_equal && t1.checked == 20, "toy translation intertwining failed");
    IntertwiningReport t2 = verify_intertwining(sl2, mobius_inversion(), 20, 7);
    c.expect(t2.all_equal && t2.checked == 20, "toy inversion intertwining failed");

    const LieAlgebraBasis& cx = cache.heisenberg_complex();
    SubspacePoint origin = subspace_point(cx, {GaussRational(), GaussRational()});
    c.expect(origin.plucker.coords.size() == 28, "image is not in P^27");

    struct Named {
        std::string name;
        RationalMapQP map;
    };
    std::vector<Named> maps;
    maps.push_back({"translation", quadric_affine(GaussRational(1), Rational(0))});
    maps.push_back({"dilation", heisenberg_dilation()});
    maps.push_back({"inversion", heisenberg_inversion()});
    for (const Named& m : maps) {
        IntertwiningReport rep = verify_intertwining(cx, m.map, 20, 11);
        c.expect(rep.all_equal && rep.checked == 20,
                 m.name + ": intertwining failed on the quadric algebra");
    }
    return c.result();
}

// Property suites: Jacobi on random triples, grading closure, injectivity
// of the subspace map, bracket preservation of every pushforward matrix.
std::string criterion_7() {
    Check c;

    for (const LieAlgebraBasis* basis : {&cache.heisenberg(), &cache.light_cone()}) {
        StructureConstants sc = structure_constants(*basis);
        std::size_t d = sc.dim();
        SplitMix64 rng(0x7AC0B1);
        for (int t = 0; t < 100; ++t) {
            std::size_t i = rng.below(d), j = rng.below(d), k = rng.below(d);
            for (std::size_t l = 0; l < d; ++l) {
                GaussRational sum;
                for (std::size_t m = 0; m < d; ++m) {
                    sum += sc.at(j, k, m) * sc.at(i, m, l);
                    sum += sc.at(k, i, m) * sc.at(j, m, l);
                    sum += sc.at(i, j, m) * sc.at(k, m, l);
                }
                c.expect(sum.is_zero(), "jacobi fails at triple (" + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(k) + ")");
                if (!sum.is_zero()) return c.result();
            }
        }
    }

    for (const LieAlgebraBasis* cx : {&cache.heisenberg_complex(), &cache.light_cone_complex()}) {
        GradedAlgebra g = grade_by_euler(*cx);
        for (const auto& [m, xs] : g.parts)
            for (const auto& [l, ys] : g.parts)
                for (const PolyVectorField& x : xs)
                    for (const PolyVectorField& y : ys) {
                        PolyVectorField br = bracket(x, y);
                        auto it = g.parts.find(m + l);
                        bool ok = it == g.parts.end()
                                      ? br.is_zero()
                                      : in_span(it->second, br, Ground::Complex);
                        c.expect(ok, "bracket of weights " + std::to_string(m) + " and " +
                                         std::to_string(l) + " leaves its graded part");
                        if (!ok) return c.result();
                    }
    }

    LieAlgebraBasis sl2 = sl2_toy();
    std::vector<PlueckerPoint> toy_points;
    for (int t = 0; t < 20; ++t)
        toy_points.push_back(subspace_point(sl2, {GaussRational(t)}).plucker);
    const LieAlgebraBasis& cx = cache.heisenberg_complex();
    std::vector<PlueckerPoint> quad_points;
    std::vector<Point> samples = sample_points(heisenberg_spec(), 20, 31);
    c.expect(samples.size() == 20, "manifold sampling produced fewer than 20 points");
    for (const Point& a : samples) quad_points.push_back(subspace_point(cx, a).plucker);
    for (const std::vector<PlueckerPoint>* pts : {&toy_points, &quad_points})
        for (std::size_t i = 0; i < pts->size(); ++i)
            for (std::size_t j = i + 1; j < pts->size(); ++j)
                c.expect(!proportional((*pts)[i].coords, (*pts)[j].coords),
                         "subspace map is not injective at pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");

    StructureConstants scc = structure_constants(cx);
    struct Named {
        std::string name;
        RationalMapQP map;
    };
    std::vector<Named> maps;
    maps.push_back({"translation", ambient_translation()});
    maps.push_back({"affine(1,0)", quadric_affine(GaussRational(1), Rational(0))});
    maps.push_back({"affine(i,2)", quadric_affine(GaussRational::i(), Rational(2))});
    maps.push_back({"inversion", heisenberg_inversion()});
    for (const Named& m : maps) {
        try {
            PushforwardMatrix nu = pushforward_matrix(cx, m.map);
            c.expect(preserves_structure(nu.matrix, scc),
                     m.name + ": pushforward does not preserve the bracket");
        } catch (const std::exception& e) {
            c.expect(false, m.name + ": pushforward failed: " + e.what());
        }
    }
    return c.result();
}

// Negative controls through the tool: each must exit nonzero and leave a
// machine-readable witness in its report.
std::string criterion_8() {
    Check c;
    std::string dup = put("dupform.json",
                          R"({"type":"quadric","n":2,"k":2,
                              "h":[[[1,0],[0,1]],[[1,0],[0,1]]]})");
    CliResult form = run_cli("check form --manifold " + dup, "c8_form.json");
    c.expect(form.exit_code == 1, "duplicated form exited " + std::to_string(form.exit_code));
    c.expect(form.report["result"]["independent"] == false, "independent flag not false");
    c.expect(!form.report["witnesses"].empty(), "duplicated form left no witness");

    std::string heis = put("heis.json", R"({"type":"quadric","n":1,"k":1,"h":[[[1]]]})");
    std::string scale = put("scale2w.json", R"({
        "n": 2,
        "p": [[{"c": 1, "e": [1, 0]}], [{"c": 1, "e": [0, 1]}]],
        "q": [[[{"c": 1, "e": [0, 0]}], []],
              [[], [{"c": "1/2", "e": [0, 0]}]]]})");
    CliResult orbit = run_cli("bir orbit --manifold " + heis + " --map " + scale +
                                  " --samples 10 --seed 19",
                              "c8_orbit.json");
    c.expect(orbit.exit_code == 1, "orbit control exited " + std::to_string(orbit.exit_code));
    bool witnessed = !orbit.report["witnesses"].empty() &&
                     orbit.report["witnesses"][0]["detail"].contains("source") &&
                     orbit.report["witnesses"][0]["detail"]["image_on_manifold"] == false;
    c.expect(witnessed, "orbit control left no usable witness");

    const LieAlgebraBasis& cx = cache.heisenberg_complex();
    RationalMapQP inv = heisenberg_inversion();
    QiMatrix nu = pushforward_matrix(cx, inv).matrix;
    nu.at(0, 1) += GaussRational(1);
    Json nu_json = Json::array();
    for (std::size_t i = 0; i < nu.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < nu.cols(); ++j) row.push_back(gauss_json(nu.at(i, j)));
        nu_json.push_back(std::move(row));
    }
    std::string nu_path = put("nu_bad.json", nu_json.dump());
    std::string basis_path = put("cx_basis.json", basis_to_json(cx).dump());
    std::string inv_path = put("inversion.json", map_to_json(inv).dump());
    CliResult verify = run_cli("reg verify --basis " + basis_path + " --map " + inv_path +
                                   " --samples 6 --seed 11 --nu " + nu_path,
                               "c8_verify.json");
    c.expect(verify.exit_code == 1, "perturbed nu exited " + std::to_string(verify.exit_code));
    bool vw = !verify.report["witnesses"].empty() &&
              verify.report["witnesses"][0]["detail"].contains("sample");
    c.expect(vw, "perturbed nu left no witness point");
    return c.result();
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--cli=", 0) == 0) g_cli = a.substr(6);
    }
    if (g_cli.empty() || !std::filesystem::exists(g_cli)) {
        std::fprintf(stderr, "usage: acceptance --cli=<path-to-holreg>\n");
        return 2;
    }
    std::string tmpl = (std::filesystem::temp_directory_path() / "holreg_acc_XXXXXX").string();
    if (!mkdtemp(tmpl.data())) {
        std::fprintf(stderr, "cannot create scratch directory\n");
        return 2;
    }
    g_dir = tmpl;

    struct Criterion {
        std::string label;
        double limit_s;
        std::function<std::string()> fn;
    };
    const std::vector<Criterion> criteria{
        {"heisenberg dimensions, totally real complexification, grading (2,4,2)", 10,
         criterion_1},
        {"light cone dimension 10, grading (3,4,3), constants and euler present", 60,
         criterion_2},
        {"sphere quadric dimension 15", 60, criterion_3},
        {"matrix cremona (p, q) and determinant identities", 5, criterion_4},
        {"normal-form roundtrips and derivative identity", 10, criterion_5},
        {"toy curve [a^2 : -a : 1] and intertwining through P^27", 120, criterion_6},
        {"jacobi, grading closure, injectivity, bracket preservation", 60, criterion_7},
        {"negative controls exit nonzero with witnesses", 60, criterion_8},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& cr = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = cr.fn();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (err.empty() && secs > cr.limit_s)
            err = "exceeded the time budget";
        std::printf("criterion %zu: %s  %s (%.1fs / limit %.0fs)%s%s\n", i + 1,
                    err.empty() ? "PASS" : "FAIL", cr.label.c_str(), secs, cr.limit_s,
                    err.empty() ? "" : " -- ", err.c_str());
        std::fflush(stdout);
        if (!err.empty()) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria pass\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
