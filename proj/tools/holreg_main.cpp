// holreg: batch front end over the exact CR-geometry kernel. Every
// subcommand reads JSON files, writes one JSON report, and exits with
// 0 = checks pass, 1 = a verification failed (witnesses in the report),
// 2 = unusable input.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "holreg/errors.hpp"
#include "holreg/hol_solver.hpp"
#include "holreg/json_io.hpp"
#include "holreg/lie_structure.hpp"
#include "holreg/regularizer.hpp"

namespace {

using holreg::Json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text, const std::string& path) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON: " + path);
    return j;
}

/// Loads a JSON file and records its digest in the report's input table.
Json load_input(Json& report, const std::string& role, const std::string& path) {
    std::string text = read_file(path);
    report["inputs"][role] = Json{{"path", path}, {"fnv1a64", holreg::fnv1a64_hex(text)}};
    return parse_json(text, path);
}

/// Bases arrive either bare or embedded in an upstream report.
holreg::LieAlgebraBasis basis_from_any(const Json& j) {
    if (j.contains("result") && j["result"].contains("basis"))
        return holreg::basis_from_json(j["result"]["basis"]);
    return holreg::basis_from_json(j);
}

/// Commands acting on the complexification accept real bases and lift them.
holreg::LieAlgebraBasis complexified(const holreg::LieAlgebraBasis& b) {
    if (b.ground == holreg::Ground::Complex) return b;
    return holreg::complexify(b).complex_basis;
}

struct Outcome {
    Json result;
    Json witnesses = Json::array();
    bool pass = true;
};

Json witness(std::string kind, Json detail) {
    return Json{{"kind", std::move(kind)}, {"detail", std::move(detail)}};
}

// ---------------------------------------------------------------- hol solve

Outcome run_hol_solve(Json& report, const std::string& manifold_path, int degree,
                      bool stabilize) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(load_input(report, "manifold", manifold_path));
    Outcome out;
    holreg::SolveOutcome solved;
    if (stabilize) {
        holreg::StabilizationOutcome st = holreg::solve_hol_stabilized(m, degree);
        solved = std::move(st.at_cap);
        out.result["stabilization"] =
            Json{{"dim_at_next", st.dim_at_next}, {"stable", st.stable}};
    } else {
        solved = holreg::solve_hol(m, degree);
    }
    out.result["dim_real"] = solved.basis.dim();
    out.result["bracket_closed"] = solved.bracket_closed;
    out.result["basis"] = holreg::basis_to_json(solved.basis);
    if (!solved.bracket_closed) {
        out.pass = false;
        for (const auto& [i, j] : solved.closure_failures)
            out.witnesses.push_back(witness("bracket_not_closed", Json{{"i", i}, {"j", j}}));
    }
    return out;
}

// ----------------------------------------------------------------- lie ...

Outcome run_lie_grade(Json& report, const std::string& basis_path) {
    holreg::LieAlgebraBasis given = basis_from_any(load_input(report, "basis", basis_path));
    Outcome out;
    // The grading lives on the complex span of the algebra.
    holreg::LieAlgebraBasis cx = complexified(given);
    out.result["dim_complex"] = cx.dim();
    try {
        holreg::GradedAlgebra g = holreg::grade_by_euler(cx);
        out.result["grading"] = holreg::grading_to_json(g);
    } catch (const std::invalid_argument& e) {
        out.pass = false;
        out.witnesses.push_back(witness("not_graded", e.what()));
    }
    return out;
}

Outcome run_lie_constants(Json& report, const std::string& basis_path) {
    holreg::LieAlgebraBasis basis = basis_from_any(load_input(report, "basis", basis_path));
    Outcome out;
    try {
        holreg::StructureConstants sc = holreg::structure_constants(basis);
        out.result["structure"] = holreg::structure_to_json(sc);
        bool real_tensor = true;
        for (std::size_t i = 0; i < sc.dim() && real_tensor; ++i)
            for (std::size_t j = 0; j < sc.dim() && real_tensor; ++j)
                for (std::size_t k = 0; k < sc.dim(); ++k)
                    if (!sc.at(i, j, k).is_real()) {
                        real_tensor = false;
                        break;
                    }
        if (real_tensor) {
            auto [plus, minus] = holreg::killing_signature(sc);
            out.result["killing_signature"] = Json{{"plus", plus}, {"minus", minus}};
        }
    } catch (const holreg::NotClosed& e) {
        out.pass = false;
        out.result["structure"] = nullptr;
        out.witnesses.push_back(
            witness("bracket_not_closed", Json{{"i", e.lhs}, {"j", e.rhs}, {"what", e.what()}}));
    }
    return out;
}

// ----------------------------------------------------------------- reg ...

Outcome run_reg_phi(Json& report, const std::string& basis_path, const std::string& point_path) {
    holreg::LieAlgebraBasis cx =
        complexified(basis_from_any(load_input(report, "basis", basis_path)));
    holreg::Point a = holreg::point_from_json(load_input(report, "point", point_path));
    if (static_cast<int>(a.size()) != cx.ambient_dim)
        throw InputError("point dimension does not match the basis");
    Outcome out;
    try {
        holreg::SubspacePoint sp = holreg::subspace_point(cx, a);
        out.result["isotropy_dim"] = sp.plucker.sub_dim;
        out.result["phi"] = holreg::plucker_to_json(sp.plucker);
    } catch (const std::invalid_argument& e) {
        out.pass = false;
        out.witnesses.push_back(witness("isotropy_codimension", e.what()));
    }
    return out;
}

Outcome run_reg_verify(Json& report, const std::string& basis_path, const std::string& map_path,
                       std::size_t samples, std::uint64_t seed,
                       const std::string& nu_path) {
    holreg::LieAlgebraBasis cx =
        complexified(basis_from_any(load_input(report, "basis", basis_path)));
    holreg::RationalMapQP g = holreg::map_from_json(load_input(report, "map", map_path));
    std::optional<holreg::QiMatrix> nu;
    if (!nu_path.empty()) nu = holreg::matrix_from_json(load_input(report, "nu", nu_path));
    if (!nu && !g.inverse()) throw InputError("map carries no inverse and no --nu was given");
    Outcome out;
    try {
        holreg::IntertwiningReport rep = holreg::verify_intertwining(cx, g, samples, seed, nu);
        out.result["checked"] = rep.checked;
        out.result["all_equal"] = rep.all_equal;
        out.pass = rep.all_equal;
        for (const auto& w : rep.witnesses)
            out.witnesses.push_back(witness(
                "intertwining_mismatch", Json{{"sample", holreg::point_to_json(w.sample)},
                                              {"phi_of_g", holreg::plucker_to_json(w.via_map)},
                                              {"tau_of_phi", holreg::plucker_to_json(w.via_tau)}}));
    } catch (const std::invalid_argument& e) {
        // The pushforward left the span: g does not act on this algebra.
        out.pass = false;
        out.witnesses.push_back(witness("pushforward_failure", e.what()));
    }
    return out;
}

// ----------------------------------------------------------------- bir ...

Outcome run_bir_extract(Json& report, const std::string& map_path, std::uint64_t seed) {
    holreg::RationalMapQP g = holreg::map_from_json(load_input(report, "map", map_path));
    Outcome out;
    Json comps = Json::array();
    std::vector<holreg::RatFun> components = g.rational_components();
    for (const holreg::RatFun& c : components)
        comps.push_back(Json{{"num", holreg::poly_to_json(c.num())},
                             {"den", holreg::poly_to_json(c.den())}});
    out.result["components"] = std::move(comps);
    out.result["det_q"] = holreg::poly_to_json(g.det_q());
    holreg::MultiPoly exact = g.exact_denominator();
    out.result["exact_denominator"] = holreg::poly_to_json(exact);
    out.result["exact_equals_det_q"] = (exact == holreg::poly_normalize(g.det_q()));
    try {
        holreg::reconstruct_from_pq(g.p(), g.q(), nullptr, 10, seed);
        holreg::PQPair back = holreg::pullback_pq(components);
        bool canonical = back.p == g.p();
        for (std::size_t i = 0; canonical && i < back.q.rows(); ++i)
            for (std::size_t j = 0; j < back.q.cols(); ++j)
                if (!(back.q.at(i, j) == g.q().at(i, j))) {
                    canonical = false;
                    break;
                }
        out.result["canonical"] = canonical;
        if (!canonical) {
            out.pass = false;
            out.witnesses.push_back(witness(
                "not_normal_form", "stored (p, q) differs from the re-extracted pair"));
        }
    } catch (const holreg::NonPolynomial& e) {
        out.pass = false;
        out.witnesses.push_back(witness("non_polynomial", Json{{"entry", e.entry}, {"what", e.what()}}));
    } catch (const std::invalid_argument& e) {
        out.pass = false;
        out.witnesses.push_back(witness("derivative_identity", e.what()));
    }
    return out;
}

Outcome run_bir_reconstruct(Json& report, const std::string& pq_path, std::uint64_t seed) {
    holreg::RationalMapQP raw = holreg::map_from_json(load_input(report, "pq", pq_path));
    Outcome out;
    try {
        holreg::RationalMapQP g =
            holreg::reconstruct_from_pq(raw.p(), raw.q(), raw.inverse(), 10, seed);
        out.result["map"] = holreg::map_to_json(g);
        out.result["derivative_identity_samples"] = 10;
    } catch (const std::invalid_argument& e) {
        out.pass = false;
        out.witnesses.push_back(witness("derivative_identity", e.what()));
    }
    return out;
}

Outcome run_bir_orbit(Json& report, const std::string& manifold_path, const std::string& map_path,
                      std::size_t samples, std::uint64_t seed) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(load_input(report, "manifold", manifold_path));
    holreg::RationalMapQP g = holreg::map_from_json(load_input(report, "map", map_path));
    holreg::OrbitReport rep = holreg::orbit_consistency(m, g, samples, seed);
    Outcome out;
    out.result["checked"] = rep.checked;
    out.result["consistent"] = rep.consistent;
    out.result["note"] = "sampling check, not a proof";
    out.pass = rep.consistent;
    for (const auto& w : rep.witnesses)
        out.witnesses.push_back(
            witness("orbit_escape", Json{{"source", holreg::point_to_json(w.source)},
                                         {"image", holreg::point_to_json(w.image)},
                                         {"source_on_manifold", w.source_on_manifold},
                                         {"image_on_manifold", w.image_on_manifold}}));
    return out;
}

// --------------------------------------------------------------- check ...

Outcome run_check_form(Json& report, const std::string& manifold_path) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(load_input(report, "manifold", manifold_path));
    if (!m.is_quadric()) throw InputError("check form expects a quadric manifold");
    holreg::NondegeneracyReport rep = holreg::check_hermitian_nondegenerate(m.quadric().form);
    Outcome out;
    out.result["hermitian"] = true;  // enforced by the loader
    out.result["independent"] = rep.independent;
    out.result["joint_kernel_trivial"] = rep.joint_kernel_trivial;
    out.result["nondegenerate"] = rep.nondegenerate();
    out.pass = rep.nondegenerate();
    if (!rep.independent)
        out.witnesses.push_back(
            witness("dependent_forms", "the component forms are linearly dependent over R"));
    if (!rep.joint_kernel_trivial)
        out.witnesses.push_back(witness("joint_kernel", "the forms share a kernel vector"));
    return out;
}

Outcome run_check_tube(Json& report, const std::string& manifold_path) {
    holreg::ManifoldSpec m = holreg::manifold_from_json(load_input(report, "manifold", manifold_path));
    if (m.is_quadric()) throw InputError("check tube expects a tube manifold");
    holreg::TubeConditionReport rep = holreg::check_tube_conditions(m.tube());
    Outcome out;
    out.result["homogeneous"] = m.tube().homogeneous;
    out.result["spans_affinely"] = rep.spans_affinely;
    out.result["no_tangent_constant"] = rep.no_tangent_constant;
    out.pass = rep.spans_affinely && rep.no_tangent_constant;
    if (!rep.spans_affinely)
        out.witnesses.push_back(
            witness("affine_hyperplane", "the base cone lies in an affine hyperplane"));
    if (!rep.no_tangent_constant)
        out.witnesses.push_back(
            witness("tangent_constant", "a nonzero constant field is tangent to the base"));
    return out;
}

Outcome run_check_property_p(Json& report, const std::string& basis_path) {
    holreg::LieAlgebraBasis basis = basis_from_any(load_input(report, "basis", basis_path));
    holreg::PropertyPReport rep = holreg::check_property_p(basis);
    Outcome out;
    out.result["constants_present"] = rep.constants_present;
    out.result["euler_present"] = rep.euler_present;
    out.result["holds"] = rep.holds();
    out.pass = rep.holds();
    if (!rep.constants_present)
        out.witnesses.push_back(
            witness("missing_constants", "the complex span lacks a constant field"));
    if (!rep.euler_present)
        out.witnesses.push_back(witness("missing_euler", "the complex span lacks the Euler field"));
    return out;
}

Outcome run_check_nondegenerate(Json& report, const std::string& basis_path) {
    holreg::LieAlgebraBasis basis = basis_from_any(load_input(report, "basis", basis_path));
    if (basis.ground != holreg::Ground::Real)
        throw InputError("check nondegenerate expects a real basis");
    holreg::ComplexifyOutcome cx = holreg::complexify(basis);
    Outcome out;
    out.result["dim_real"] = basis.dim();
    out.result["dim_complex"] = cx.complex_basis.dim();
    out.result["totally_real"] = cx.totally_real;
    out.pass = cx.totally_real;
    if (!cx.totally_real)
        out.witnesses.push_back(witness(
            "holomorphic_degeneracy", "the basis meets i times its own span nontrivially"));
    return out;
}

// ------------------------------------------------------------------- main

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write file: " + out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CR-geometry toolkit: hol(M), birational normal forms, regularization"};
    app.require_subcommand(1);

    std::string manifold_path, basis_path, map_path, point_path, pq_path, nu_path, out_path;
    int degree = 2;
    bool stabilize = false;
    std::size_t samples = 20;
    std::uint64_t seed = 0;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the JSON report to this file");
    };

    CLI::App* hol = app.add_subcommand("hol", "Lie algebras of infinitesimal automorphisms");
    CLI::App* hol_solve = hol->add_subcommand("solve", "solve the tangency equations");
    hol_solve->add_option("--manifold", manifold_path, "manifold JSON")->required();
    hol_solve->add_option("--degree", degree, "polynomial degree cap")->required();
    hol_solve->add_flag("--stabilize", stabilize, "re-solve at degree+1 and compare");
    add_out(hol_solve);

    CLI::App* lie = app.add_subcommand("lie", "structure of a solved algebra");
    CLI::App* lie_grade = lie->add_subcommand("grade", "Euler weight decomposition");
    lie_grade->add_option("--basis", basis_path, "basis JSON or solve report")->required();
    add_out(lie_grade);
    CLI::App* lie_constants = lie->add_subcommand("constants", "structure constants");
    lie_constants->add_option("--basis", basis_path, "basis JSON or solve report")->required();
    add_out(lie_constants);

    CLI::App* reg = app.add_subcommand("reg", "projective regularization");
    CLI::App* reg_phi = reg->add_subcommand("phi", "Pluecker image of one point");
    reg_phi->add_option("--basis", basis_path, "basis JSON or solve report")->required();
    reg_phi->add_option("--point", point_path, "point JSON")->required();
    add_out(reg_phi);
    CLI::App* reg_verify = reg->add_subcommand("verify", "intertwining phi o g = tau(nu) o phi");
    reg_verify->add_option("--basis", basis_path, "basis JSON or solve report")->required();
    reg_verify->add_option("--map", map_path, "map JSON")->required();
    reg_verify->add_option("--samples", samples, "sample count");
    reg_verify->add_option("--seed", seed, "sampling seed");
    reg_verify->add_option("--nu", nu_path, "override the pushforward matrix (diagnostics)");
    add_out(reg_verify);

    CLI::App* bir = app.add_subcommand("bir", "birational maps in (p, q) normal form");
    CLI::App* bir_extract = bir->add_subcommand("extract", "denominators and reduced components");
    bir_extract->add_option("--map", map_path, "map JSON")->required();
    bir_extract->add_option("--seed", seed, "sampling seed");
    add_out(bir_extract);
    CLI::App* bir_reconstruct = bir->add_subcommand("reconstruct", "validate external (p, q) data");
    bir_reconstruct->add_option("--pq", pq_path, "(p, q) JSON")->required();
    bir_reconstruct->add_option("--seed", seed, "sampling seed");
    add_out(bir_reconstruct);
    CLI::App* bir_orbit = bir->add_subcommand("orbit", "sampled check that g maps M into M");
    bir_orbit->add_option("--manifold", manifold_path, "manifold JSON")->required();
    bir_orbit->add_option("--map", map_path, "map JSON")->required();
    bir_orbit->add_option("--samples", samples, "sample count");
    bir_orbit->add_option("--seed", seed, "sampling seed");
    add_out(bir_orbit);

    CLI::App* check = app.add_subcommand("check", "standalone validity checks");
    CLI::App* check_form = check->add_subcommand("form", "Hermitian form non-degeneracy");
    check_form->add_option("--manifold", manifold_path, "quadric manifold JSON")->required();
    add_out(check_form);
    CLI::App* check_tube = check->add_subcommand("tube", "tube base conditions");
    check_tube->add_option("--manifold", manifold_path, "tube manifold JSON")->required();
    add_out(check_tube);
    CLI::App* check_pp = check->add_subcommand("property-p", "constants and Euler field");
    check_pp->add_option("--basis", basis_path, "basis JSON or solve report")->required();
    add_out(check_pp);
    CLI::App* check_nd = check->add_subcommand("nondegenerate", "totally real complexification");
    check_nd->add_option("--basis", basis_path, "real basis JSON or solve report")->required();
    add_out(check_nd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    Json report;
    std::string command;
    const auto started = std::chrono::steady_clock::now();
    try {
        Outcome out;
        if (hol_solve->parsed()) {
            command = "hol solve";
            report["command"] = command;
            report["options"] = Json{{"degree", degree}, {"stabilize", stabilize}};
            out = run_hol_solve(report, manifold_path, degree, stabilize);
        } else if (lie_grade->parsed()) {
            command = "lie grade";
            report["command"] = command;
            out = run_lie_grade(report, basis_path);
        } else if (lie_constants->parsed()) {
            command = "lie constants";
            report["command"] = command;
            out = run_lie_constants(report, basis_path);
        } else if (reg_phi->parsed()) {
            command = "reg phi";
            report["command"] = command;
            out = run_reg_phi(report, basis_path, point_path);
        } else if (reg_verify->parsed()) {
            command = "reg verify";
            report["command"] = command;
            report["options"] = Json{{"samples", samples}, {"seed", seed}};
            out = run_reg_verify(report, basis_path, map_path, samples, seed, nu_path);
        } else if (bir_extract->parsed()) {
            command = "bir extract";
            report["command"] = command;
            report["options"] = Json{{"seed", seed}};
            out = run_bir_extract(report, map_path, seed);
        } else if (bir_reconstruct->parsed()) {
            command = "bir reconstruct";
            report["command"] = command;
            report["options"] = Json{{"seed", seed}};
            out = run_bir_reconstruct(report, pq_path, seed);
        } else if (bir_orbit->parsed()) {
            command = "bir orbit";
            report["command"] = command;
            report["options"] = Json{{"samples", samples}, {"seed", seed}};
            out = run_bir_orbit(report, manifold_path, map_path, samples, seed);
        } else if (check_form->parsed()) {
            command = "check form";
            report["command"] = command;
            out = run_check_form(report, manifold_path);
        } else if (check_tube->parsed()) {
            command = "check tube";
            report["command"] = command;
            out = run_check_tube(report, manifold_path);
        } else if (check_pp->parsed()) {
            command = "check property-p";
            report["command"] = command;
            out = run_check_property_p(report, basis_path);
        } else {
            command = "check nondegenerate";
            report["command"] = command;
            out = run_check_nondegenerate(report, basis_path);
        }
        report["result"] = std::move(out.result);
        report["witnesses"] = std::move(out.witnesses);
        report["status"] = out.pass ? "pass" : "fail";
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();
        emit(report, out_path);
        return out.pass ? 0 : 1;
    } catch (const std::exception& e) {
        // Anything escaping a handler is an input problem: unreadable or
        // malformed files, shape mismatches, exhausted sampling budgets.
        report["status"] = "input_error";
        report["error"] = e.what();
        std::cerr << "holreg: " << e.what() << "\n";
        try {
            emit(report, out_path);
        } catch (const std::exception&) {
            std::cout << report.dump(2) << "\n";
        }
        return 2;
    }
}
