// Python bindings: every operation speaks JSON strings so the wire format
// is identical to the command-line tool and the file formats. The Python
// package wraps these in dict-in/dict-out functions.

#include <pybind11/pybind11.h>

#include <optional>
#include <string>

#include "holreg/birational.hpp"
#include "holreg/hol_solver.hpp"
#include "holreg/json_io.hpp"
#include "holreg/lie_structure.hpp"
#include "holreg/manifold.hpp"
#include "holreg/regularizer.hpp"

namespace py = pybind11;

namespace {

using holreg::Json;

Json parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

holreg::LieAlgebraBasis basis_arg(const std::string& text) {
    Json j = parse(text);
    if (j.contains("result") && j["result"].contains("basis"))
        return holreg::basis_from_json(j["result"]["basis"]);
    return holreg::basis_from_json(j);
}

holreg::LieAlgebraBasis complexified(const holreg::LieAlgebraBasis& b) {
    if (b.ground == holreg::Ground::Complex) return b;
    return holreg::complexify(b).complex_basis;
}

std::string solve(const std::string& manifold, int degree, bool stabilize) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(parse(manifold));
    Json out;
    holreg::SolveOutcome solved;
    if (stabilize) {
        holreg::StabilizationOutcome st = holreg::solve_hol_stabilized(m, degree);
        solved = std::move(st.at_cap);
        out["stabilization"] = Json{{"dim_at_next", st.dim_at_next}, {"stable", st.stable}};
    } else {
        solved = holreg::solve_hol(m, degree);
    }
    out["dim_real"] = solved.basis.dim();
    out["bracket_closed"] = solved.bracket_closed;
    out["basis"] = holreg::basis_to_json(solved.basis);
    return out.dump();
}

std::string grade(const std::string& basis) {
    holreg::GradedAlgebra g = holreg::grade_by_euler(complexified(basis_arg(basis)));
    return holreg::grading_to_json(g).dump();
}

std::string constants(const std::string& basis) {
    holreg::StructureConstants sc = holreg::structure_constants(basis_arg(basis));
    return holreg::structure_to_json(sc).dump();
}

std::string complexify_basis(const std::string& basis) {
    holreg::ComplexifyOutcome cx = holreg::complexify(basis_arg(basis));
    return Json{{"totally_real", cx.totally_real},
                {"basis", holreg::basis_to_json(cx.complex_basis)}}
        .dump();
}

std::string property_p(const std::string& basis) {
    holreg::PropertyPReport rep = holreg::check_property_p(basis_arg(basis));
    return Json{{"constants_present", rep.constants_present},
                {"euler_present", rep.euler_present},
                {"holds", rep.holds()}}
        .dump();
}

std::string check_form(const std::string& manifold) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(parse(manifold));
    if (!m.is_quadric()) throw std::invalid_argument("expected a quadric manifold");
    holreg::NondegeneracyReport rep = holreg::check_hermitian_nondegenerate(m.quadric().form);
    return Json{{"independent", rep.independent},
                {"joint_kernel_trivial", rep.joint_kernel_trivial},
                {"nondegenerate", rep.nondegenerate()}}
        .dump();
}

std::string check_tube(const std::string& manifold) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(parse(manifold));
    if (m.is_quadric()) throw std::invalid_argument("expected a tube manifold");
    holreg::TubeConditionReport rep = holreg::check_tube_conditions(m.tube());
    return Json{{"spans_affinely", rep.spans_affinely},
                {"no_tangent_constant", rep.no_tangent_constant}}
        .dump();
}

std::string phi(const std::string& basis, const std::string& point) {
    holreg::LieAlgebraBasis cx = complexified(basis_arg(basis));
    holreg::SubspacePoint sp = holreg::subspace_point(cx, holreg::point_from_json(parse(point)));
    return Json{{"isotropy_dim", sp.plucker.sub_dim},
                {"phi", holreg::plucker_to_json(sp.plucker)}}
        .dump();
}

std::string verify(const std::string& basis, const std::string& map, std::size_t samples,
                   std::uint64_t seed) {
    holreg::LieAlgebraBasis cx = complexified(basis_arg(basis));
    holreg::RationalMapQP g = holreg::map_from_json(parse(map));
    holreg::IntertwiningReport rep = holreg::verify_intertwining(cx, g, samples, seed);
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back(Json{{"sample", holreg::point_to_json(w.sample)},
                                 {"phi_of_g", holreg::plucker_to_json(w.via_map)},
                                 {"tau_of_phi", holreg::plucker_to_json(w.via_tau)}});
    return Json{{"checked", rep.checked},
                {"all_equal", rep.all_equal},
                {"witnesses", std::move(witnesses)}}
        .dump();
}

std::string extract(const std::string& map) {
    holreg::RationalMapQP g = holreg::map_from_json(parse(map));
    Json comps = Json::array();
    for (const holreg::RatFun& c : g.rational_components())
        comps.push_back(Json{{"num", holreg::poly_to_json(c.num())},
                             {"den", holreg::poly_to_json(c.den())}});
    holreg::MultiPoly exact = g.exact_denominator();
    return Json{{"components", std::move(comps)},
                {"det_q", holreg::poly_to_json(g.det_q())},
                {"exact_denominator", holreg::poly_to_json(exact)},
                {"exact_equals_det_q", exact == holreg::poly_normalize(g.det_q())}}
        .dump();
}

std::string reconstruct(const std::string& pq, std::uint64_t seed) {
    holreg::RationalMapQP raw = holreg::map_from_json(parse(pq));
    holreg::RationalMapQP g = holreg::reconstruct_from_pq(raw.p(), raw.q(), raw.inverse(), 10, seed);
    return holreg::map_to_json(g).dump();
}

std::string orbit(const std::string& manifold, const std::string& map, std::size_t samples,
                  std::uint64_t seed) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(parse(manifold));
    holreg::RationalMapQP g = holreg::map_from_json(parse(map));
    holreg::OrbitReport rep = holreg::orbit_consistency(m, g, samples, seed);
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back(Json{{"source", holreg::point_to_json(w.source)},
                                 {"image", holreg::point_to_json(w.image)},
                                 {"source_on_manifold", w.source_on_manifold},
                                 {"image_on_manifold", w.image_on_manifold}});
    return Json{{"checked", rep.checked},
                {"consistent", rep.consistent},
                {"witnesses", std::move(witnesses)}}
        .dump();
}

std::string compose_maps(const std::string& g1, const std::string& g2) {
    holreg::RationalMapQP a = holreg::map_from_json(parse(g1));
    holreg::RationalMapQP b = holreg::map_from_json(parse(g2));
    return holreg::map_to_json(holreg::compose(a, b)).dump();
}

std::string apply_map(const std::string& map, const std::string& point) {
    holreg::RationalMapQP g = holreg::map_from_json(parse(map));
    return holreg::point_to_json(g.apply(holreg::point_from_json(parse(point)))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact CR-geometry kernel: tangent algebras, normal forms, regularization";
    m.def("solve_hol", &solve, py::arg("manifold"), py::arg("degree"),
          py::arg("stabilize") = false,
          "All polynomial fields tangent to the manifold up to the degree cap.");
    m.def("grade", &grade, py::arg("basis"),
          "Euler weight decomposition of the complexified span.");
    m.def("structure_constants", &constants, py::arg("basis"),
          "Bracket tensor over the given basis.");
    m.def("complexify", &complexify_basis, py::arg("basis"),
          "Canonical complex span of a real basis.");
    m.def("property_p", &property_p, py::arg("basis"),
          "Constants and Euler field membership in the complex span.");
    m.def("check_form", &check_form, py::arg("manifold"),
          "Independence and joint-kernel test of a quadric's forms.");
    m.def("check_tube", &check_tube, py::arg("manifold"),
          "Affine span and tangent-constant conditions of a tube base.");
    m.def("phi", &phi, py::arg("basis"), py::arg("point"),
          "Pluecker coordinates of the isotropy subalgebra at a point.");
    m.def("verify_intertwining", &verify, py::arg("basis"), py::arg("map"),
          py::arg("samples") = 20, py::arg("seed") = 0,
          "Sampled check that the subspace map intertwines the action.");
    m.def("extract", &extract, py::arg("map"),
          "Reduced components and denominators of a map in (p, q) form.");
    m.def("reconstruct", &reconstruct, py::arg("pq"), py::arg("seed") = 0,
          "Validate external (p, q) data and return the canonical map.");
    m.def("orbit_consistency", &orbit, py::arg("manifold"), py::arg("map"),
          py::arg("samples") = 20, py::arg("seed") = 0,
          "Sampled check that the map sends the manifold into itself.");
    m.def("compose", &compose_maps, py::arg("g1"), py::arg("g2"),
          "Composition g1 after g2 in normal form.");
    m.def("apply", &apply_map, py::arg("map"), py::arg("point"),
          "Evaluate the map at a regular point.");
}
