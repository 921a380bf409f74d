// Command-line surface: analyze / tree / verify / random-germ over germ
// documents and bivariate polynomials.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "eggers/report.hpp"

using namespace eggers;

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::syntax_error: return 2;
        case Errc::not_reduced:
        case Errc::unsupported_branch_shape: return 4;
        case Errc::irrational_track_root: return 5;
        case Errc::mismatch: return 1;
        case Errc::internal: return 70;
        default: return 3;
    }
}

struct CommonInput {
    std::string path;
    std::string poly;
    std::vector<std::string> lambda_specs;
    std::vector<std::string> coords;
    bool partial = false;
};

void add_input_options(CLI::App* cmd, CommonInput& in) {
    cmd->add_option("input", in.path, "germ document (JSON)");
    cmd->add_option("--poly", in.poly, "polynomial in X and Y instead of a document");
    cmd->add_option("--lambda", in.lambda_specs,
                    "parameter: transversal | X | branch:<label> | linear:a,b");
    cmd->add_option("--change-coords", in.coords, "apply (X,Y) -> (aX+bY, cX+dY) first")
        ->expected(4);
    cmd->add_flag("--partial", in.partial, "tolerate irrational track continuations");
}

LambdaSpec parse_lambda_spec(const std::string& s, int counter) {
    LambdaSpec spec;
    spec.label = "l" + std::to_string(counter);
    if (s == "transversal") {
        spec.transversal = true;
    } else if (s == "X" || s == "x") {
        spec.x_axis = true;
        spec.label = "X";
    } else if (s.rfind("branch:", 0) == 0) {
        spec.branch = s.substr(7);
        spec.label = *spec.branch;
    } else if (s.rfind("linear:", 0) == 0) {
        fail(Errc::syntax_error, "normalize linear parameters with --change-coords, then use X");
    } else {
        fail(Errc::syntax_error, "unknown lambda spec: " + s);
    }
    return spec;
}

GermDocument load_document(const CommonInput& in) {
    GermDocument doc;
    if (!in.poly.empty()) {
        check(in.path.empty(), Errc::syntax_error, "give a document or --poly, not both");
        doc.poly = in.poly;
    } else {
        check(!in.path.empty(), Errc::syntax_error, "no input given");
        std::ifstream f(in.path);
        check(f.good(), Errc::syntax_error, "cannot open " + in.path);
        Json j;
        try {
            f >> j;
        } catch (const std::exception& e) {
            fail(Errc::syntax_error, std::string("bad JSON: ") + e.what());
        }
        doc = parse_document(j);
    }
    if (!in.coords.empty()) {
        check(doc.poly.has_value(), Errc::syntax_error, "--change-coords needs a polynomial input");
        Rat m[4];
        for (int k = 0; k < 4; ++k) {
            auto v = rat_parse(in.coords[k]);
            check(v.has_value(), Errc::syntax_error, "bad coordinate entry: " + in.coords[k]);
            m[k] = *v;
        }
        BiPoly f = parse_poly(*doc.poly);
        doc.poly = print_poly(linear_change(f, m[0], m[1], m[2], m[3]));
    }
    int counter = 1;
    for (const auto& s : in.lambda_specs) doc.lambdas.push_back(parse_lambda_spec(s, counter++));
    return doc;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        check(f.good(), Errc::syntax_error, "cannot write " + out_path);
        f << text << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equisingularity invariants of plane curve germs"};
    app.require_subcommand(1);

    CommonInput ain, tin, vin;
    std::string out_path, tree_out;
    bool with_verify = false;
    auto* analyze = app.add_subcommand("analyze", "full invariant report as JSON");
    add_input_options(analyze, ain);
    analyze->add_option("--out", out_path, "write the report to a file");
    analyze->add_flag("--cross-verify", with_verify,
                      "also run the root-counting oracle (polynomial inputs)");

    auto* tree = app.add_subcommand("tree", "emit the decorated tree as DOT");
    add_input_options(tree, tin);
    tree->add_option("--out", tree_out, "write the DOT text to a file");

    auto* verify = app.add_subcommand("verify", "cross-check the combinatorics against root counts");
    add_input_options(verify, vin);

    std::uint64_t seed = 1;
    GermGenOptions gopt;
    int probes = 2;
    auto* rnd = app.add_subcommand("random-germ", "emit a random valid germ document");
    rnd->add_option("--seed", seed, "generator seed");
    rnd->add_option("--max-branches", gopt.max_branches, "bound on the number of branches");
    rnd->add_option("--max-pairs", gopt.max_char_pairs, "bound on characteristic pairs per branch");
    rnd->add_option("--probes", probes, "how many parameter rows to attach");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            GermDocument doc = load_document(ain);
            Analysis a = analyze_document(doc, with_verify, ain.partial);
            emit(report_json(a).dump(2), out_path);
            return a.partial ? 5 : 0;
        }
        if (tree->parsed()) {
            GermDocument doc = load_document(tin);
            Analysis a = analyze_document(doc, false, tin.partial);
            emit(to_dot(a.tree), tree_out);
            return 0;
        }
        if (verify->parsed()) {
            GermDocument doc = load_document(vin);
            check(doc.poly.has_value(), Errc::syntax_error, "verify needs a polynomial input");
            BiPoly f = parse_poly(*doc.poly);
            VerifyReport r = cross_verify(f, vin.partial);
            for (const auto& c : r.checks)
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
            if (r.partial) std::cout << "NOTE partial ledger: some tracks were not expanded\n";
            return r.pass() ? 0 : 1;
        }
        if (rnd->parsed()) {
            Germ g = random_germ(seed, gopt);
            std::vector<LambdaSpec> ls;
            for (int k = 0; k < probes; ++k) {
                auto probe = random_probe(g, seed + 101 * k,
                                          k == 0 ? ProbeMode::transversal : ProbeMode::any);
                if (!probe) continue;
                LambdaSpec spec;
                spec.label = "l" + std::to_string(k + 1);
                if (probe->same_as) {
                    spec.branch = g.branches[*probe->same_as].label;
                } else {
                    bool trans = true;
                    for (const auto& c : probe->contacts)
                        if (c != ExtRat(Rat(1))) trans = false;
                    if (trans)
                        spec.transversal = true;
                    else
                        for (int i = 0; i < g.r(); ++i)
                            spec.contacts.emplace_back(g.branches[i].label, probe->contacts[i].value());
                }
                ls.push_back(std::move(spec));
            }
            std::cout << document_json(g, ls).dump(2) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
