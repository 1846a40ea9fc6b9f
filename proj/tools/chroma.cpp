// chroma: exact computations around proper colorings of labeled graphs --
// cut statistics and the W-polynomial, the coloring ideal with its
// monomial<->coloring codec, and the coloring complex with its face
// structure.  See README.md for the formats.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chroma/complex.hpp"
#include "chroma/cuts.hpp"
#include "chroma/error.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/ideal.hpp"
#include "chroma/verify.hpp"

namespace {

using namespace chroma;

std::int64_t permutation_guard() {
    const char* env = std::getenv("CHROMA_MAX_PERMS");
    if (!env) return limits::max_permutations;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (!end || *end != '\0' || v < 1)
        throw DomainError("CHROMA_MAX_PERMS must be a positive integer");
    return v;
}

nlohmann::ordered_json poly_json(const IntPolynomial& p) {
    auto a = nlohmann::ordered_json::array();
    for (const Int& c : p.coefficients()) a.push_back(c.str());
    return a;
}

Coloring parse_coloring_arg(const std::string& text, int palette, int d) {
    Coloring c;
    c.palette = palette;
    c.assignment.assign(d, 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t colon = text.find(':', pos);
        if (colon == std::string::npos)
            throw ParseError("coloring entries must look like \"v:c\"");
        std::size_t comma = text.find(',', colon);
        if (comma == std::string::npos) comma = text.size();
        int v = std::stoi(text.substr(pos, colon - pos));
        int col = std::stoi(text.substr(colon + 1, comma - colon - 1));
        if (v < 1 || v > d)
            throw ParseError("coloring names vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(d));
        if (c.assignment[v - 1] != 0)
            throw ParseError("vertex " + std::to_string(v) + " colored twice");
        if (col < 1 || col > palette)
            throw ParseError("color " + std::to_string(col) + " outside 1.." +
                             std::to_string(palette));
        c.assignment[v - 1] = col;
        pos = comma + (comma < text.size() ? 1 : 0);
    }
    for (int v = 1; v <= d; ++v)
        if (c.assignment[v - 1] == 0)
            throw ParseError("vertex " + std::to_string(v) + " has no color");
    return c;
}

int run(int argc, char** argv) {
    CLI::App app{"exact coloring-ideal and coloring-complex computations"};
    app.require_subcommand(1);

    std::string graph_path, graph2_path, monomial_expr, coloring_expr;
    std::int64_t eval_n = -1;
    bool as_json = false;

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial coefficients");
    chromatic->add_option("--graph", graph_path, "graph file")->required();
    chromatic->add_option("--n", eval_n, "evaluate at n");
    chromatic->add_flag("--json", as_json, "JSON output");

    auto* wpoly = app.add_subcommand("wpoly", "cut-count polynomial over all permutations");
    wpoly->add_option("--graph", graph_path, "graph file")->required();
    wpoly->add_flag("--json", as_json, "JSON output");

    auto* complex_cmd = app.add_subcommand("complex", "coloring complex of the graph");
    complex_cmd->add_option("--graph", graph_path, "graph file")->required();
    bool want_f = false, want_h = false, want_euler = false, want_facets = false,
         want_json = false;
    complex_cmd->add_flag("--fvector", want_f, "print the f-vector");
    complex_cmd->add_flag("--hvector", want_h, "print the h-vector");
    complex_cmd->add_flag("--euler", want_euler, "print Euler characteristics");
    complex_cmd->add_flag("--facets", want_facets, "print all facets");
    complex_cmd->add_flag("--json", want_json, "full JSON export");

    auto* ideal_cmd = app.add_subcommand("ideal", "coloring ideal of the graph");
    ideal_cmd->add_option("--graph", graph_path, "graph file")->required();
    bool want_gens = false, want_stats = false;
    std::int64_t hilbert_n = -1;
    ideal_cmd->add_flag("--generators", want_gens, "print the minimal generators");
    ideal_cmd->add_flag("--stats", want_stats, "print generator statistics");
    ideal_cmd->add_option("--hilbert", hilbert_n, "count degree-n monomials");
    ideal_cmd->add_flag("--json", as_json, "JSON output");

    auto* monomial_cmd = app.add_subcommand("monomial", "monomial <-> coloring codec");
    monomial_cmd->require_subcommand(1);
    auto* decode = monomial_cmd->add_subcommand("decode", "monomial to coloring");
    decode->add_option("--graph", graph_path, "graph file")->required();
    decode->add_option("--m", monomial_expr, "monomial, e.g. \"x{2,5}^3 * x{}^2\"")->required();
    auto* encode = monomial_cmd->add_subcommand("encode", "coloring to monomial");
    encode->add_option("--graph", graph_path, "graph file")->required();
    encode->add_option("--coloring", coloring_expr, "comma list of v:c pairs")->required();
    int palette = 0;
    encode->add_option("--palette", palette, "number of available colors")->required();

    auto* iso = app.add_subcommand("iso", "compare two coloring complexes");
    iso->add_option("--graph1", graph_path, "first graph file")->required();
    iso->add_option("--graph2", graph2_path, "second graph file")->required();
    iso->add_flag("--json", as_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "replay the identity checklist");
    VerifyOptions vopt;
    verify->add_option("--exhaustive-d", vopt.exhaustive_d,
                       "exhaustive sweep bound for the W-identity");
    std::vector<int> sample_ds;
    int sample_count = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    verify->add_option("--sample-d", sample_ds, "sampled vertex counts (repeatable)");
    verify->add_option("--count", sample_count, "samples per sampled d");
    verify->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_set = true;
    });
    std::vector<int> only_checks;
    verify->add_option("--check", only_checks, "run only these check numbers (repeatable)");
    std::string fault;
    verify->add_option("--inject-fault", fault,
                       "negative control; the only supported value is cut-rule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const std::int64_t max_perms = permutation_guard();

    if (chromatic->parsed()) {
        Graph g = load_graph_file(graph_path);
        IntPolynomial chi = chromatic_polynomial(g);
        if (as_json) {
            nlohmann::ordered_json j;
            j["coefficients"] = poly_json(chi);
            if (eval_n >= 0) j["value"] = chi(eval_n).str();
            std::cout << j.dump() << "\n";
        } else if (eval_n >= 0) {
            std::cout << chi(eval_n).str() << "\n";
        } else {
            std::cout << chi.coefficient_string() << "\n";
        }
        return 0;
    }

    if (wpoly->parsed()) {
        Graph g = load_graph_file(graph_path);
        WPolynomial w = w_polynomial(g, max_perms);
        if (as_json) {
            nlohmann::ordered_json j;
            j["coefficients"] = poly_json(w);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << w.coefficient_string() << "\n";
        }
        return 0;
    }

    if (complex_cmd->parsed()) {
        Graph g = load_graph_file(graph_path);
        ColoringComplex c = build_complex(g);
        auto print_vec = [](const std::vector<Int>& v) {
            if (v.empty()) {
                std::cout << "void\n";
                return;
            }
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? " " : "") << v[i].str();
            std::cout << "\n";
        };
        if (want_json) {
            std::cout << complex_to_json(c) << "\n";
        } else if (want_f) {
            print_vec(f_vector(c));
        } else if (want_h) {
            print_vec(h_vector(c));
        } else if (want_euler) {
            EulerCharacteristics ec = euler_characteristics(c);
            if (ec.void_complex) std::cout << "void ";
            std::cout << "euler=" << ec.euler.str() << " reduced=" << ec.reduced.str() << "\n";
        } else if (want_facets) {
            for (const Chain& facet : c.facets) {
                for (std::size_t i = 0; i < facet.size(); ++i)
                    std::cout << (i ? " " : "") << facet[i].to_string();
                std::cout << "\n";
            }
        } else {
            std::cout << "d=" << c.d << " facets=" << c.facets.size() << "\n";
        }
        return 0;
    }

    if (ideal_cmd->parsed()) {
        Graph g = load_graph_file(graph_path);
        if (hilbert_n >= 0) {
            std::cout << count_degree_monomials(g, hilbert_n).str() << "\n";
        } else if (want_stats) {
            std::cout << format_gen_stats(generator_stats(g, max_perms));
        } else {
            // --generators is also the default view
            for (const Monomial& m : minimal_generators(g, max_perms))
                std::cout << format_monomial(m, g.vertex_count()) << "\n";
        }
        return 0;
    }

    if (decode->parsed()) {
        Graph g = load_graph_file(graph_path);
        Monomial m = parse_monomial(monomial_expr, g.vertex_count());
        Coloring c = decode_monomial(g, m);
        std::cout << "palette " << c.palette << "\n";
        std::cout << "coloring";
        for (int v = 1; v <= g.vertex_count(); ++v)
            std::cout << " " << v << ":" << c.color(v);
        std::cout << "\n";
        return 0;
    }

    if (encode->parsed()) {
        Graph g = load_graph_file(graph_path);
        Coloring c = parse_coloring_arg(coloring_expr, palette, g.vertex_count());
        Monomial m = encode_coloring(g, c);
        std::cout << format_monomial(m, g.vertex_count()) << "\n";
        return 0;
    }

    if (iso->parsed()) {
        Graph g1 = load_graph_file(graph_path);
        Graph g2 = load_graph_file(graph2_path);
        IsoResult r = complexes_isomorphic(build_complex(g1), build_complex(g2));
        if (as_json) {
            nlohmann::ordered_json j;
            j["isomorphic"] = r.isomorphic;
            if (r.witness) {
                auto w = nlohmann::ordered_json::object();
                for (auto& [a, b] : *r.witness) w[a.to_string()] = b.to_string();
                j["witness"] = std::move(w);
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (r.isomorphic ? "isomorphic" : "not isomorphic") << "\n";
            if (r.witness)
                for (auto& [a, b] : *r.witness)
                    std::cout << "  " << a.to_string() << " -> " << b.to_string() << "\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        if (!sample_ds.empty()) vopt.sample_ds = sample_ds;
        if (sample_count >= 0) vopt.sample_count = sample_count;
        if (seed_set) vopt.seed = seed;
        vopt.only_checks = only_checks;
        vopt.max_perms = max_perms;
        if (!fault.empty()) {
            if (fault != "cut-rule")
                throw DomainError("unknown fault \"" + fault + "\"; supported: cut-rule");
            vopt.fault = Fault::cut_rule;
        }
        std::vector<CheckResult> results = run_verification(vopt);
        std::cout << format_report(results);
        return all_passed(results) ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chroma::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
