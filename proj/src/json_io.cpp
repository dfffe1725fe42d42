#include "holreg/json_io.hpp"

#include <stdexcept>

namespace holreg {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as string or integer");
}

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) fail(std::string("key '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

Json gauss_to_json(const GaussRational& z) {
    return Json{{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}};
}

GaussRational gauss_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return GaussRational(rational_from_json(j));
    if (j.is_object()) {
        Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
        return GaussRational(std::move(re), std::move(im));
    }
    fail("expected a Gaussian rational");
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["c"] = gauss_to_json(c);
        term["e"] = e;
        terms.push_back(std::move(term));
    }
    return terms;
}

MultiPoly poly_from_json(const Json& j, int nvars) {
    if (!j.is_array()) fail("polynomial must be an array of terms");
    MultiPoly p(nvars);
    for (const Json& term : j) {
        GaussRational c = gauss_from_json(need(term, "c"));
        const Json& ej = need(term, "e");
        if (!ej.is_array()) fail("term exponents must be an array");
        Exponents e;
        for (const Json& v : ej) {
            if (!v.is_number_integer()) fail("exponent must be an integer");
            e.push_back(v.get<int>());
        }
        if (static_cast<int>(e.size()) != nvars) fail("exponent vector length mismatch");
        p.add_term(e, c);
    }
    return p;
}

Json field_to_json(const PolyVectorField& f) {
    Json comps = Json::array();
    for (const MultiPoly& c : f.components()) comps.push_back(poly_to_json(c));
    return Json{{"n", f.dim()}, {"components", std::move(comps)}};
}

PolyVectorField field_from_json(const Json& j) {
    int n = need_int(j, "n");
    if (n < 1) fail("field dimension must be positive");
    const Json& comps = need(j, "components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != n)
        fail("field needs exactly n components");
    std::vector<MultiPoly> out;
    out.reserve(comps.size());
    for (const Json& c : comps) out.push_back(poly_from_json(c, n));
    return PolyVectorField(std::move(out));
}

Json basis_to_json(const LieAlgebraBasis& b) {
    Json elements = Json::array();
    for (const PolyVectorField& f : b.elements) elements.push_back(field_to_json(f));
    return Json{{"ground", b.ground == Ground::Real ? "real" : "complex"},
                {"n", b.ambient_dim},
                {"degree_cap", b.degree_cap},
                {"elements", std::move(elements)}};
}

LieAlgebraBasis basis_from_json(const Json& j) {
    std::string ground = need(j, "ground").get<std::string>();
    if (ground != "real" && ground != "complex") fail("ground must be 'real' or 'complex'");
    const Json& elements = need(j, "elements");
    if (!elements.is_array() || elements.empty()) fail("basis needs at least one element");
    std::vector<PolyVectorField> fields;
    fields.reserve(elements.size());
    for (const Json& e : elements) fields.push_back(field_from_json(e));
    int n = fields.front().dim();
    for (const PolyVectorField& f : fields)
        if (f.dim() != n) fail("basis elements live in different dimensions");
    if (j.contains("n") && need_int(j, "n") != n) fail("basis 'n' contradicts its elements");
    int cap = j.contains("degree_cap") ? need_int(j, "degree_cap") : -1;
    if (cap < 0) {
        for (const PolyVectorField& f : fields) cap = std::max(cap, f.degree());
        if (cap < 0) cap = 0;
    }
    return LieAlgebraBasis{ground == "real" ? Ground::Real : Ground::Complex, n, cap,
                           std::move(fields)};
}

Json manifold_to_json(const ManifoldSpec& m) {
    if (m.is_quadric()) {
        const QuadricSpec& q = m.quadric();
        Json h = Json::array();
        for (int l = 0; l < q.k(); ++l) {
            Json rows = Json::array();
            for (int a = 0; a < q.n(); ++a) {
                Json row = Json::array();
                for (int b = 0; b < q.n(); ++b)
                    row.push_back(gauss_to_json(q.form.matrix(l).at(
                        static_cast<std::size_t>(a), static_cast<std::size_t>(b))));
                rows.push_back(std::move(row));
            }
            h.push_back(std::move(rows));
        }
        return Json{{"type", "quadric"}, {"n", q.n()}, {"k", q.k()}, {"h", std::move(h)}};
    }
    const TubeSpec& t = m.tube();
    Json out{{"type", "tube"},
             {"n", t.n},
             {"rho", poly_to_json(t.rho)},
             {"monic_var", t.monic_var}};
    if (!t.homogeneous) out["allow_inhomogeneous"] = true;
    return out;
}

ManifoldSpec manifold_from_json(const Json& j) {
    std::string type = need(j, "type").get<std::string>();
    if (type == "quadric") {
        int n = need_int(j, "n");
        int k = need_int(j, "k");
        if (n < 1 || k < 1) fail("quadric needs n >= 1 and k >= 1");
        const Json& h = need(j, "h");
        if (!h.is_array() || static_cast<int>(h.size()) != k) fail("quadric needs k form matrices");
        std::vector<QiMatrix> mats;
        for (const Json& mj : h) {
            if (!mj.is_array() || static_cast<int>(mj.size()) != n) fail("form matrix shape");
            QiMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) {
                const Json& row = mj.at(static_cast<std::size_t>(a));
                if (!row.is_array() || static_cast<int>(row.size()) != n) fail("form matrix shape");
                for (int b = 0; b < n; ++b)
                    m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
                        gauss_from_json(row.at(static_cast<std::size_t>(b)));
            }
            mats.push_back(std::move(m));
        }
        return ManifoldSpec(QuadricSpec{HermitianFormTuple(n, std::move(mats))});
    }
    if (type == "tube") {
        int n = need_int(j, "n");
        if (n < 1) fail("tube needs n >= 1");
        MultiPoly rho = poly_from_json(need(j, "rho"), n);
        int monic_var = need_int(j, "monic_var");
        bool allow = j.contains("allow_inhomogeneous") && j.at("allow_inhomogeneous").get<bool>();
        return ManifoldSpec(TubeSpec(n, std::move(rho), monic_var, allow));
    }
    fail("manifold type must be 'quadric' or 'tube'");
}

Json map_to_json(const RationalMapQP& g) {
    Json p = Json::array();
    for (const MultiPoly& c : g.p()) p.push_back(poly_to_json(c));
    Json q = Json::array();
    for (std::size_t i = 0; i < g.q().rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < g.q().cols(); ++jj) row.push_back(poly_to_json(g.q().at(i, jj)));
        q.push_back(std::move(row));
    }
    Json out{{"n", g.n()}, {"p", std::move(p)}, {"q", std::move(q)}};
    if (g.inverse()) out["inverse"] = map_to_json(*g.inverse());
    return out;
}

RationalMapQP map_from_json(const Json& j) {
    int n = need_int(j, "n");
    if (n < 1) fail("map dimension must be positive");
    const Json& pj = need(j, "p");
    if (!pj.is_array() || static_cast<int>(pj.size()) != n) fail("map needs n components in p");
    std::vector<MultiPoly> p;
    for (const Json& c : pj) p.push_back(poly_from_json(c, n));
    const Json& qj = need(j, "q");
    if (!qj.is_array() || static_cast<int>(qj.size()) != n) fail("q must be an n x n matrix");
    PolyMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n), n);
    for (int i = 0; i < n; ++i) {
        const Json& row = qj.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) fail("q must be an n x n matrix");
        for (int c = 0; c < n; ++c)
            q.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
                poly_from_json(row.at(static_cast<std::size_t>(c)), n);
    }
    std::shared_ptr<const RationalMapQP> inverse;
    if (j.contains("inverse"))
        inverse = std::make_shared<RationalMapQP>(map_from_json(j.at("inverse")));
    return RationalMapQP(std::move(p), std::move(q), std::move(inverse));
}

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (const GaussRational& c : p) out.push_back(gauss_to_json(c));
    return out;
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) fail("point must be a nonempty array");
    Point p;
    for (const Json& c : j) p.push_back(gauss_from_json(c));
    return p;
}

Json matrix_to_json(const QiMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gauss_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QiMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
    std::vector<std::vector<GaussRational>> rows;
    for (const Json& rj : j) {
        if (!rj.is_array() || rj.empty()) fail("matrix rows must be nonempty arrays");
        std::vector<GaussRational> row;
        for (const Json& c : rj) row.push_back(gauss_from_json(c));
        if (!rows.empty() && row.size() != rows.front().size()) fail("ragged matrix");
        rows.push_back(std::move(row));
    }
    return QiMatrix::from_rows(rows);
}

Json plucker_to_json(const PlueckerPoint& p) {
    Json subsets = Json::array();
    for (const auto& s : p.subsets) {
        Json sub = Json::array();
        for (std::size_t v : s) sub.push_back(v + 1);
        subsets.push_back(std::move(sub));
    }
    Json coords = Json::array();
    for (const GaussRational& c : p.coords) coords.push_back(gauss_to_json(c));
    return Json{{"space_dim", p.space_dim},
                {"sub_dim", p.sub_dim},
                {"subsets", std::move(subsets)},
                {"coords", std::move(coords)}};
}

Json structure_to_json(const StructureConstants& sc) {
    const std::size_t d = sc.dim();
    Json tensor = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json plane = Json::array();
        for (std::size_t j = 0; j < d; ++j) {
            Json row = Json::array();
            for (std::size_t k = 0; k < d; ++k) row.push_back(gauss_to_json(sc.at(i, j, k)));
            plane.push_back(std::move(row));
        }
        tensor.push_back(std::move(plane));
    }
    return Json{{"dim", d}, {"tensor", std::move(tensor)}};
}

Json grading_to_json(const GradedAlgebra& g) {
    Json parts = Json::array();
    for (const auto& [w, fields] : g.parts) {
        Json basis = Json::array();
        for (const PolyVectorField& f : fields) basis.push_back(field_to_json(f));
        parts.push_back(Json{{"m", w}, {"dim", fields.size()}, {"basis", std::move(basis)}});
    }
    return Json{{"parts", std::move(parts)}, {"dim", g.total_dim()}};
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace holreg
