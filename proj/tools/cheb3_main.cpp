#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cheb3/errors.hpp"
#include "cheb3/genfun.hpp"
#include "cheb3/table_io.hpp"
#include "cheb3/verify.hpp"

namespace {

constexpr int kCapsGuardrail = 12;

int usage_error(const std::string& msg) {
    std::cerr << "cheb3: " << msg << "\n";
    return 2;
}

bool within_guardrail(const std::vector<int>& v, bool allow_large) {
    for (int x : v)
        if (x < 0 || (!allow_large && x > kCapsGuardrail)) return false;
    return true;
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "cheb3: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

std::string format_complex(std::complex<double> v) {
    std::ostringstream out;
    out.precision(12);
    out << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return out.str();
}

int run_gen(const std::string& kind, const std::vector<int>& caps, const std::string& format,
            const std::string& out_path, bool allow_large) {
    if (caps.size() != 3) return usage_error("--caps needs three comma-separated integers");
    if (!within_guardrail(caps, allow_large))
        return usage_error("caps must lie in 0.." + std::to_string(kCapsGuardrail) +
                           " (override with --allow-large-caps)");

    cheb3::RootData rd = cheb3::RootData::build(3);
    cheb3::InvariantReducer reducer(rd);
    cheb3::GeneratingFunctions gf(rd, reducer);
    const cheb3::Exp3 c{caps[0], caps[1], caps[2]};

    cheb3::TableDocument doc;
    if (kind == "first") {
        doc = cheb3::document_from_series("first", gf.first_kind_table(c),
                                          "stabilizer-normalized orbit series");
    } else if (kind == "second") {
        doc = cheb3::document_from_series("second", gf.second_kind_table(c),
                                          "alternating-quotient series");
    } else if (kind == "K") {
        doc = cheb3::document_from_cells("K", gf.derive_numerator_first().numerator,
                                         {3, 5, 3}, "slot-product derivation");
    } else if (kind == "L") {
        doc = cheb3::document_from_cells("L", gf.derive_numerator_second().numerator,
                                         {2, 4, 2}, "parity-signed slot sum, exact quotient");
    } else {
        doc = cheb3::document_from_denominators(gf.denominator_factors(),
                                                "matches bundled reference");
    }
    const std::string text =
        format == "json" ? cheb3::render_json(doc) : cheb3::render_latex(doc);
    return write_output(text, out_path);
}

int run_eval(const std::string& kind, const std::vector<int>& n_in,
             const std::vector<double>& phi_in) {
    if (n_in.size() != 3) return usage_error("--n needs three comma-separated integers");
    if (phi_in.size() != 3) return usage_error("--phi needs three comma-separated reals");
    if (!within_guardrail(n_in, false))
        return usage_error("index components must lie in 0.." + std::to_string(kCapsGuardrail));

    cheb3::RootData rd = cheb3::RootData::build(3);
    cheb3::InvariantReducer reducer(rd);
    const cheb3::WeightCoord n{{n_in[0], n_in[1], n_in[2]}};
    const cheb3::EvalPoint at{{phi_in[0], phi_in[1], phi_in[2]}};

    const auto z = eval_numeric(orbit_sum(rd, cheb3::WeightCoord{{1, 0, 0}}), at);
    const auto r = eval_numeric(orbit_sum(rd, cheb3::WeightCoord{{0, 1, 0}}), at);
    const auto zb = eval_numeric(orbit_sum(rd, cheb3::WeightCoord{{0, 0, 1}}), at);

    cheb3::TriPoly poly;
    std::complex<double> orbit_route;
    bool orbit_defined = true;
    if (kind == "first") {
        poly = reducer.chebyshev_first(n);
        orbit_route = eval_numeric(orbit_sum(rd, n), at);
    } else {
        const auto rho = rd.weyl_vector_weight();
        poly = reducer.laurent_to_tri(antisym_quotient(rd, alt_trace(rd, n + rho)));
        const auto den = eval_numeric(alt_trace(rd, rho), at);
        if (std::abs(den) < 1e-12) {
            orbit_defined = false;
        } else {
            orbit_route = eval_numeric(alt_trace(rd, n + rho), at) / den;
        }
    }
    const auto via_poly = poly.eval(z, r, zb);

    std::cout << (kind == "first" ? "T" : "U") << to_string(n) << " = "
              << cheb3::to_plain_string(poly) << "\n";
    std::cout << "polynomial route: " << format_complex(via_poly) << "\n";
    if (orbit_defined) {
        std::cout << "orbit route:      " << format_complex(orbit_route) << "\n";
        std::ostringstream diff;
        diff.precision(3);
        diff << std::scientific << std::abs(via_poly - orbit_route);
        std::cout << "|difference| = " << diff.str() << "\n";
    } else {
        std::cout << "orbit route:      indeterminate here (alternating denominator ~ 0)\n";
    }
    return 0;
}

int run_verify(const std::vector<int>& caps, bool strict, const std::string& json_path) {
    if (caps.size() != 3) return usage_error("--caps needs three comma-separated integers");
    if (!within_guardrail(caps, false))
        return usage_error("caps must lie in 0.." + std::to_string(kCapsGuardrail));

    const cheb3::VerifyReport rep =
        cheb3::run_verification({caps[0], caps[1], caps[2]});
    std::cout << cheb3::render_text(rep);
    if (!json_path.empty()) {
        int rc = write_output(cheb3::render_json_report(rep), json_path);
        if (rc != 0) return rc;
    }
    return rep.pass(strict) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables of the three-variable Chebyshev polynomials"};
    app.require_subcommand(1);

    std::string gen_kind, gen_format = "json", gen_out;
    std::vector<int> gen_caps{3, 3, 3};
    bool gen_allow_large = false;
    auto* gen = app.add_subcommand("gen", "generate a table and render it");
    gen->add_option("kind", gen_kind, "first|second|K|L|Z")
        ->required()
        ->check(CLI::IsMember({"first", "second", "K", "L", "Z"}));
    gen->add_option("--caps", gen_caps, "index bounds n1,n2,n3 (first/second only)")
        ->delimiter(',');
    gen->add_option("--format", gen_format, "json|latex")
        ->check(CLI::IsMember({"json", "latex"}));
    gen->add_option("--out", gen_out, "output file (default: stdout)");
    gen->add_flag("--allow-large-caps", gen_allow_large,
                  "lift the per-index guardrail of " + std::to_string(kCapsGuardrail));

    std::string eval_kind;
    std::vector<int> eval_n;
    std::vector<double> eval_phi;
    auto* ev = app.add_subcommand("eval", "evaluate one polynomial at a phase point");
    ev->add_option("kind", eval_kind, "first|second")
        ->required()
        ->check(CLI::IsMember({"first", "second"}));
    ev->add_option("--n", eval_n, "dominant index a,b,c")->required()->delimiter(',');
    ev->add_option("--phi", eval_phi, "phases f1,f2,f3")->required()->delimiter(',');

    std::vector<int> verify_caps{3, 3, 3};
    bool strict = false;
    std::string verify_json;
    auto* ver = app.add_subcommand("verify", "run the full cross-verification stack");
    ver->add_option("--caps", verify_caps, "recurrence box bounds n1,n2,n3")->delimiter(',');
    ver->add_flag("--strict", strict, "flagged-suspect differences also fail");
    ver->add_option("--json", verify_json, "write the JSON report here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_caps, gen_format, gen_out, gen_allow_large);
        if (ev->parsed()) return run_eval(eval_kind, eval_n, eval_phi);
        return run_verify(verify_caps, strict, verify_json);
    } catch (const std::exception& e) {
        std::cerr << "cheb3: " << e.what() << "\n";
        return 1;
    }
}
