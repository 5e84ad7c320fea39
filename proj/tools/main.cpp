// knotcolor command line: exact knot coloring invariants from PD codes or
// pretzel specs.
//
// Exit codes: 0 success, 1 usage, 2 parse/validation failure, 3 violated
// cross-route assertion (an internal invariant, never expected to fire).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knotcolor/coloring.hpp"
#include "knotcolor/diagram.hpp"
#include "knotcolor/goeritz.hpp"
#include "knotcolor/pretzel.hpp"
#include "knotcolor/report.hpp"

namespace kc = knotcolor;

namespace {

struct Input {
    std::string descriptor;
    std::optional<kc::PretzelSpec> spec;
    std::optional<kc::PlanarDiagram> diagram;

    bool is_pretzel() const { return spec.has_value(); }
    const kc::PlanarDiagram& knot() {
        if (!diagram) diagram = kc::pretzel_diagram(*spec);
        return *diagram;
    }
};

Input load_input(const std::string& arg) {
    Input in;
    in.descriptor = arg;
    std::string trimmed = arg;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    if (trimmed.rfind("P(", 0) == 0) {
        in.spec = kc::PretzelSpec::parse(trimmed);
        return in;
    }
    std::ifstream f(arg);
    if (!f) throw kc::MalformedToken("cannot open input file '" + arg + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    in.diagram = kc::PlanarDiagram::parse(buf.str());
    return in;
}

std::uint64_t solution_cap() {
    if (const char* env = std::getenv("KNOTCOLOR_MAX_SOLUTIONS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw kc::KnotError("KNOTCOLOR_MAX_SOLUTIONS must be a positive integer");
    }
    return kc::kDefaultSolutionCap;
}

void emit(const kc::Report& report, bool as_json) {
    std::cout << (as_json ? report.to_json() + "\n" : report.to_text());
}

int run_det(Input& in, const std::string& via, bool as_json) {
    kc::Report r;
    r.input = in.descriptor;
    r.kind = in.is_pretzel() ? "pretzel" : "pd";

    std::optional<mpz_class> via_coloring, via_goeritz, via_formula;
    if (in.is_pretzel()) via_formula = kc::pretzel_determinant(*in.spec);
    if (via == "coloring" || via == "both")
        via_coloring = kc::determinant(in.knot());
    if (via == "goeritz" || via == "both")
        via_goeritz = kc::goeritz_determinant(kc::faces(in.knot()));

    if (via_coloring) r.determinant_coloring = via_coloring->get_str();
    if (via_goeritz) r.determinant_goeritz = via_goeritz->get_str();

    mpz_class value = via_formula   ? *via_formula
                      : via_coloring ? *via_coloring
                                     : *via_goeritz;
    for (const auto& candidate : {via_formula, via_coloring, via_goeritz})
        if (candidate && *candidate != value) {
            std::cerr << "determinant routes disagree on " << in.descriptor << "\n";
            return 3;
        }
    r.determinant = value.get_str();
    r.coloring_group.clear();
    for (const auto& dv : kc::coloring_group(in.knot())) r.coloring_group.push_back(dv.get_str());
    emit(r, as_json);
    return 0;
}

int run_nullity(Input& in, std::uint64_t p, bool as_json) {
    kc::Report r;
    r.input = in.descriptor;
    r.kind = in.is_pretzel() ? "pretzel" : "pd";
    std::size_t via_c = kc::nullity(in.knot(), p);
    std::size_t via_g = kc::goeritz_nullity(kc::faces(in.knot()), p);
    if (via_c != via_g) {
        std::cerr << "coloring and Goeritz nullities disagree mod " << p << "\n";
        return 3;
    }
    if (in.is_pretzel() && kc::pretzel_nullity(*in.spec, p) != via_c) {
        std::cerr << "closed-form pretzel nullity disagrees mod " << p << "\n";
        return 3;
    }
    r.nullities.emplace_back(p, via_c);
    emit(r, as_json);
    return 0;
}

int run_colorings(Input& in, std::uint64_t n, bool list, bool as_json) {
    kc::Report r;
    r.input = in.descriptor;
    r.kind = in.is_pretzel() ? "pretzel" : "pd";
    r.coloring_modulus = n;
    mpz_class total = kc::coloring_count(in.knot(), n);
    r.coloring_total = total.get_str();
    mpz_class nontrivial = total - static_cast<unsigned long>(n);
    r.coloring_nontrivial = nontrivial.get_str();
    if (kc::is_prime(n)) r.nullities.emplace_back(n, kc::nullity(in.knot(), n));
    if (list) {
        for (const auto& col : kc::colorings(in.knot(), n, solution_cap()))
            r.coloring_list.push_back(col.colors);
    }
    emit(r, as_json);
    return 0;
}

int run_matrices(Input& in, bool as_json) {
    kc::Report r;
    r.input = in.descriptor;
    r.kind = in.is_pretzel() ? "pretzel" : "pd";
    if (in.is_pretzel()) r.matrices.emplace_back("A", kc::build_A(*in.spec).a);
    if (in.knot().crossing_count() > 0) {
        auto cs = kc::build_precoloring(in.knot());
        r.matrices.emplace_back("pre_coloring", cs.pre_matrix);
        r.matrices.emplace_back("coloring", cs.matrix);
    }
    auto gs = kc::build_goeritz(kc::faces(in.knot()));
    r.matrices.emplace_back("pre_goeritz", gs.pre_matrix);
    r.matrices.emplace_back("goeritz", gs.matrix);
    emit(r, as_json);
    return 0;
}

int run_goeritz(Input& in, bool as_json) {
    kc::Report r;
    r.input = in.descriptor;
    r.kind = in.is_pretzel() ? "pretzel" : "pd";
    auto rc = kc::faces(in.knot());
    auto gs = kc::build_goeritz(rc);
    r.matrices.emplace_back("pre_goeritz", gs.pre_matrix);
    r.matrices.emplace_back("goeritz", gs.matrix);
    r.determinant_goeritz = kc::goeritz_determinant(rc).get_str();
    r.determinant = r.determinant_goeritz;
    emit(r, as_json);
    return 0;
}

int run_compare(Input& in, bool as_json) {
    kc::Report r;
    r.input = in.descriptor;
    r.kind = in.is_pretzel() ? "pretzel" : "pd";
    mpz_class dc = kc::determinant(in.knot());
    auto rc = kc::faces(in.knot());
    mpz_class dg = kc::goeritz_determinant(rc);
    r.determinant_coloring = dc.get_str();
    r.determinant_goeritz = dg.get_str();
    if (dc != dg) {
        std::cerr << "determinant routes disagree on " << in.descriptor << "\n";
        return 3;
    }
    r.determinant = dc.get_str();
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        std::size_t nc = kc::nullity(in.knot(), p);
        std::size_t ng = kc::goeritz_nullity(rc, p);
        if (nc != ng) {
            std::cerr << "nullities disagree mod " << p << "\n";
            return 3;
        }
        r.nullities.emplace_back(p, nc);
    }
    emit(r, as_json);
    return 0;
}

int run_pretzel_sweep(int max_m, int max_q, bool as_json) {
    std::uint64_t checked = 0, knots = 0, failures = 0;
    std::ostringstream table;
    table << "  m        specs   knot-closing   failures\n";
    for (int m = 1; m <= max_m; ++m) {
        std::uint64_t m_checked = 0, m_knots = 0, m_fail = 0;
        std::vector<long long> q(m, -max_q);
        for (;;) {
            kc::PretzelSpec spec{q};
            ++m_checked;
            mpz_class formula = kc::pretzel_determinant(spec);
            if (abs(kc::det(kc::build_A(spec).a)) != formula) ++m_fail;
            if (kc::closes_to_knot(spec)) {
                ++m_knots;
                if (kc::determinant(kc::pretzel_diagram(spec)) != formula) ++m_fail;
                for (std::uint64_t p : {2, 3, 5}) {
                    std::size_t closed = kc::pretzel_nullity(spec, p);
                    if (closed != kc::nullspace_mod_p(kc::build_A(spec).a, p).nullity) ++m_fail;
                    if (closed != kc::nullity(kc::pretzel_diagram(spec), p)) ++m_fail;
                }
            }
            int i = m - 1;
            while (i >= 0) {
                ++q[i];
                if (q[i] == 0) ++q[i];  // twist counts are nonzero
                if (q[i] <= max_q) break;
                q[i] = -max_q;
                --i;
            }
            if (i < 0) break;
        }
        table << "  " << m << "   " << m_checked << "   " << m_knots << "   " << m_fail << "\n";
        checked += m_checked;
        knots += m_knots;
        failures += m_fail;
    }
    if (as_json) {
        std::cout << "{\"specs\": " << checked << ", \"knot_closing\": " << knots
                  << ", \"failures\": " << failures << "}\n";
    } else {
        std::cout << table.str() << "total: " << checked << " specs, " << knots
                  << " knot-closing, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fox n-coloring invariants of knots"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string input, via = "both";
    std::uint64_t prime = 2, modulus = 3;
    bool list = false;
    int max_m = 3, max_q = 3;

    auto* det_cmd = app.add_subcommand("det", "knot determinant");
    det_cmd->add_option("input", input, "PD file or P(...) spec")->required();
    det_cmd->add_option("--via", via, "coloring|goeritz|both")
        ->check(CLI::IsMember({"coloring", "goeritz", "both"}));

    auto* nul_cmd = app.add_subcommand("nullity", "mod-p nullity");
    nul_cmd->add_option("input", input)->required();
    nul_cmd->add_option("-p,--prime", prime, "prime modulus")->required();

    auto* col_cmd = app.add_subcommand("colorings", "count (and list) n-colorings");
    col_cmd->add_option("input", input)->required();
    col_cmd->add_option("-n,--modulus", modulus, "number of colors")->required();
    col_cmd->add_flag("--list", list, "enumerate the colorings");

    auto* mat_cmd = app.add_subcommand("matrices", "print the linear systems");
    mat_cmd->add_option("input", input)->required();

    auto* goe_cmd = app.add_subcommand("goeritz", "Goeritz matrices and determinant");
    goe_cmd->add_option("input", input)->required();

    auto* cmp_cmd = app.add_subcommand("compare", "cross-check both routes");
    cmp_cmd->add_option("input", input)->required();

    auto* sweep_cmd = app.add_subcommand("pretzel-sweep", "verify the closed forms");
    sweep_cmd->add_option("--max-m", max_m, "largest number of twist regions");
    sweep_cmd->add_option("--max-q", max_q, "largest |q_i|");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed()) return run_pretzel_sweep(max_m, max_q, as_json);
        Input in = load_input(input);
        if (det_cmd->parsed()) return run_det(in, via, as_json);
        if (nul_cmd->parsed()) return run_nullity(in, prime, as_json);
        if (col_cmd->parsed()) return run_colorings(in, modulus, list, as_json);
        if (mat_cmd->parsed()) return run_matrices(in, as_json);
        if (goe_cmd->parsed()) return run_goeritz(in, as_json);
        if (cmp_cmd->parsed()) return run_compare(in, as_json);
    } catch (const kc::AuxiliaryMismatch& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const kc::InconsistentDifferences& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const kc::KnotError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
