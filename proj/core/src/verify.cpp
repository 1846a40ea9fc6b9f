#include "chroma/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chroma/complex.hpp"
#include "chroma/cuts.hpp"
#include "chroma/error.hpp"
#include "chroma/ideal.hpp"
#include "chroma/poly_lab.hpp"

namespace chroma {

Graph random_graph(int d, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (rng() & 1u) edges.emplace_back(i, j);
    return Graph::from_edges(d, std::move(edges));
}

std::vector<int> random_permutation(int d, std::mt19937_64& rng) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 1);
    for (int i = d - 1; i > 0; --i)
        std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

void for_all_graphs(int d, const std::function<void(const Graph&)>& fn) {
    std::vector<Edge> slots;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) slots.emplace_back(i, j);
    for (std::uint64_t bits = 0; bits < (1ull << slots.size()); ++bits) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((bits >> k) & 1ull) edges.push_back(slots[k]);
        fn(Graph::from_edges(d, std::move(edges)));
    }
}

Graph fixture_path4() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}); }
Graph fixture_star4() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}}); }
Graph fixture_worked7() {
    return Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}});
}
Graph fixture_triangles5() {
    return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}
Graph fixture_chorded5() {
    return Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}
Graph fixture_codec7() {
    return Graph::from_edges(7, {{1, 3}, {2, 3}, {3, 4}, {3, 5}, {2, 6}, {5, 7}});
}

namespace {

std::string format_edge_set(const Graph& g) {
    std::string s = "{";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.edges()[i].first) + std::to_string(g.edges()[i].second);
    }
    return s + "}";
}

std::mt19937_64 check_rng(const VerifyOptions& opt, int check_id, int d) {
    return std::mt19937_64(opt.seed * 1000003ull ^
                           (static_cast<std::uint64_t>(check_id) * 8191ull + d));
}

// Cut-count enumeration with the tie-break clause removed; exists only as
// the negative control for check 1.
IntPolynomial w_polynomial_without_tie_rule(const Graph& g, std::int64_t max_perms) {
    const int d = g.vertex_count();
    if (factorial(d) > max_perms) throw BoundError("permutation guard exceeded");
    std::vector<int> perm(d), ell(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Int> w(d + 1);
    do {
        for (int k = 0; k < d; ++k) {
            int best = -1;
            VertexSet nb = g.neighbors(perm[k]);
            for (int j = 0; j < k; ++j)
                if (nb.contains(perm[j]) && ell[j] > best) best = ell[j];
            ell[k] = best + 1;
        }
        int cuts = 1;
        for (int p = 1; p < d; ++p)
            if (ell[p - 1] < ell[p]) ++cuts;
        ++w[cuts];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return IntPolynomial(std::move(w));
}

struct Failure {
    bool failed = false;
    std::string detail;
    void note(const std::string& msg) {
        if (!failed) {
            failed = true;
            detail = msg;
        }
    }
};

using CheckFn = std::function<long long(const VerifyOptions&, Failure&)>;

// ---- check 1: W-polynomial equals the W-transform of chi --------------

long long check_w_identity(const VerifyOptions& opt, Failure& fail) {
    long long instances = 0;
    auto probe = [&](const Graph& g) {
        const int d = g.vertex_count();
        IntPolynomial w = opt.fault == Fault::cut_rule
                              ? w_polynomial_without_tie_rule(g, opt.max_perms)
                              : w_polynomial(g, opt.max_perms);
        IntPolynomial expected = w_transform(chromatic_polynomial(g), d + 1);
        ++instances;
        if (!(w == expected))
            fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                      ": cut enumeration gives [" + w.coefficient_string() +
                      "] but the transform gives [" + expected.coefficient_string() + "]");
    };
    for (int d = 1; d <= opt.exhaustive_d; ++d) for_all_graphs(d, probe);
    for (int d : opt.sample_ds) {
        auto rng = check_rng(opt, 1, d);
        for (int k = 0; k < opt.sample_count; ++k) probe(random_graph(d, rng));
    }
    return instances;
}

// ---- check 2: label invariance ----------------------------------------

long long check_label_invariance(const VerifyOptions& opt, Failure& fail) {
    long long instances = 0;
    for (int d = 3; d <= 6; ++d) {
        auto rng = check_rng(opt, 2, d);
        for (int k = 0; k < 14; ++k) {
            Graph g = random_graph(d, rng);
            std::vector<int> sigma = random_permutation(d, rng);
            ++instances;
            if (!(w_polynomial(g, opt.max_perms) ==
                  w_polynomial(relabel(g, sigma), opt.max_perms)))
                fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                          ": W-polynomial changed under a relabeling");
        }
    }
    return instances;
}

// ---- check 3: Hilbert identity -----------------------------------------

long long check_hilbert(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    long long instances = 0;
    for (int d = 1; d <= 5; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            IntPolynomial chi = chromatic_polynomial(g);
            for (std::int64_t n = 0; n <= 4; ++n) {
                ++instances;
                Int got = count_degree_monomials(g, n);
                Int want = chi(n + 1);
                if (got != want)
                    fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                              " n=" + std::to_string(n) + ": " + got.str() +
                              " degree-n monomials but chi(n+1) = " + want.str());
            }
        });
    return instances;
}

// ---- check 4: tail transform gives the h-vector ------------------------

long long check_tail_h(const VerifyOptions& opt, Failure& fail) {
    long long instances = 0;
    auto probe = [&](const Graph& g) {
        if (g.edge_count() == 0) return;
        const int d = g.vertex_count();
        ++instances;
        HVec h = h_vector(build_complex(g));
        IntPolynomial tail = tail_polynomial(chromatic_polynomial(g), d);
        IntPolynomial expected = w_transform(tail, d).shifted_down();
        if (!(IntPolynomial(h) == expected))
            fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                      ": h-vector differs from the shifted tail transform");
    };
    for (int d = 3; d <= 5; ++d) for_all_graphs(d, probe);
    {
        auto rng = check_rng(opt, 4, 6);
        int count = std::min(opt.sample_count, 100);
        for (int k = 0; k < count; ++k) probe(random_graph(6, rng));
    }
    return instances;
}

// ---- check 5: facet counts ---------------------------------------------

long long check_facet_count(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    long long instances = 0;
    for (int d = 3; d <= 6; ++d) {
        Int per_edge = factorial(d - 1);
        for_all_graphs(d, [&](const Graph& g) {
            ++instances;
            ColoringComplex c = build_complex(g);
            if (Int(c.facets.size()) != per_edge * g.edge_count()) {
                fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                          ": facet count " + std::to_string(c.facets.size()) +
                          " != E(d-1)!");
                return;
            }
            std::map<Edge, long long> classes;
            for (Edge e : c.facet_edges) ++classes[e];
            for (auto& [e, n] : classes)
                if (Int(n) != per_edge)
                    fail.note("d=" + std::to_string(d) +
                              ": facet class of an edge has size " + std::to_string(n));
        });
    }
    return instances;
}

// ---- check 6: top h-entry counts acyclic orientations -------------------

long long check_acyclic(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    long long instances = 0;
    for (int d = 3; d <= 5; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            if (g.edge_count() == 0) return;
            ++instances;
            OrientationCount ao = count_acyclic_orientations(g);
            if (!ao.exhaustive) {
                fail.note("orientation count unexpectedly fell back to the formula");
                return;
            }
            HVec h = h_vector(build_complex(g));
            if (h[d - 2] != ao.count - 1) {
                fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                          ": h_top = " + h[d - 2].str() + " but AO-1 = " +
                          Int(ao.count - 1).str());
                return;
            }
            EulerCharacteristics ec = euler_characteristics(build_complex(g));
            Int signed_reduced = (d - 3) % 2 ? -ec.reduced : ec.reduced;
            if (signed_reduced != ao.count - 1)
                fail.note("d=" + std::to_string(d) + " edges=" + format_edge_set(g) +
                          ": (-1)^(d-3) * reduced Euler = " + signed_reduced.str() +
                          " but AO-1 = " + Int(ao.count - 1).str());
        });
    return instances;
}

// ---- check 7: the worked 7-vertex example ------------------------------

long long check_worked_example(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    CutProfile p = cut_profile(fixture_worked7(), {5, 2, 3, 6, 4, 1, 7});
    const std::string expected =
        "perm 5 2 3 6 4 1 7\n"
        "ell 0 0 1 0 2 1 1\n"
        "cuts 0 2 4 6\n"
        "blocks {2,5} {3,6} {1,4} {7}\n";
    if (format_cut_profile(p) != expected)
        fail.note("cut profile of 5236417 printed as:\n" + format_cut_profile(p));
    return 1;
}

// ---- check 8: the degree-7 codec examples ----------------------------

long long check_codec(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    // Host graph chosen so that both example colorings are proper: no edge
    // may land inside any block of either example.
    Graph g = fixture_codec7();

    Monomial m = parse_monomial("x{}^2 * x{2,5}^3 * x{2,3,5}^2", 7);
    Coloring c = decode_monomial(g, m);
    std::vector<int> expected_assignment{8, 3, 6, 8, 3, 8, 8};
    if (c.palette != 8 || c.assignment != expected_assignment)
        fail.note("decoding x{}^2 x{2,5}^3 x{2,3,5}^2 gave the wrong coloring");

    Coloring nine;
    nine.palette = 9;
    nine.assignment = {7, 7, 4, 7, 7, 4, 6};
    Monomial got = encode_coloring(g, nine);
    Monomial want = parse_monomial("x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2", 7);
    if (!(got == want)) fail.note("encoding the 9-coloring gave " + format_monomial(got, 7));
    return 2;
}

// ---- check 9: the tree pair --------------------------------------------

long long check_tree_pair(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    Graph p4 = fixture_path4(), star = fixture_star4();
    HVec expect_h{1, 10, 7};
    HVec expect_nt{1, 12, 21, 8};
    for (const Graph* g : {&p4, &star}) {
        if (h_vector(build_complex(*g)) != expect_h) fail.note("tree h-vector != (1,10,7)");
        if (nontruncated_h_vector(*g) != expect_nt)
            fail.note("non-truncated h-vector != (1,12,21,8)");
        if (nontruncated_h_vector_direct(*g) != expect_nt)
            fail.note("directly built non-truncated complex has a different h-vector");
    }
    IsoResult iso = complexes_isomorphic(build_complex(p4), build_complex(star));
    if (iso.isomorphic) fail.note("the two tree complexes must not be isomorphic");
    return 7;
}

// ---- check 10: two-edge graphs share a complex ---------------------------

bool witness_maps_facets(const ColoringComplex& a, const ColoringComplex& b,
                         const std::map<VertexSet, VertexSet>& w) {
    std::set<Chain> target(b.facets.begin(), b.facets.end());
    std::set<Chain> image;
    for (const Chain& f : a.facets) {
        std::vector<VertexSet> mapped;
        for (VertexSet s : f) {
            auto it = w.find(s);
            if (it == w.end()) return false;
            mapped.push_back(it->second);
        }
        std::sort(mapped.begin(), mapped.end(),
                  [](VertexSet x, VertexSet y) { return x.size() < y.size(); });
        Chain im(mapped.begin(), mapped.end());
        if (!target.count(im)) return false;
        image.insert(im);
    }
    return image.size() == target.size();
}

std::string facet_degree_multiset(const ColoringComplex& c) {
    std::map<VertexSet, int> deg;
    for (const Chain& f : c.facets)
        for (VertexSet s : f) ++deg[s];
    std::vector<int> ms;
    for (auto& [s, n] : deg) ms.push_back(n);
    std::sort(ms.begin(), ms.end());
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i)
        out += (i ? " " : "") + std::to_string(ms[i]);
    return out;
}

long long check_two_edge_pair(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    long long instances = 0;
    for (int d : {4, 5}) {
        Graph disjoint = Graph::from_edges(d, {{1, 2}, {3, 4}});
        Graph adjacent = Graph::from_edges(d, {{1, 2}, {2, 3}});
        ColoringComplex ca = build_complex(disjoint), cb = build_complex(adjacent);
        IsoResult iso = complexes_isomorphic(ca, cb);
        ++instances;
        if (!iso.isomorphic) {
            fail.note("two-edge complexes at d=" + std::to_string(d) +
                      " are not isomorphic; facet-degree multisets: disjoint [" +
                      facet_degree_multiset(ca) + "] vs adjacent [" +
                      facet_degree_multiset(cb) + "]");
            continue;
        }
        if (!iso.witness || !witness_maps_facets(ca, cb, *iso.witness))
            fail.note("two-edge witness at d=" + std::to_string(d) +
                      " does not map facets onto facets");
    }
    return instances;
}

// ---- check 11: the chromatic-symmetric pair ------------------------------

long long check_signature_pair(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    Graph g = fixture_triangles5(), h = fixture_chorded5();
    if (!(chromatic_polynomial(g) == chromatic_polynomial(h)))
        fail.note("fixture pair is not chromatically equivalent");
    if (chromatic_class_signature(g, 5) != chromatic_class_signature(h, 5))
        fail.note("fixture pair does not share its coloring-class signature");
    if (generator_stats(g) == generator_stats(h))
        fail.note("generator statistics unexpectedly coincide");
    return 3;
}

// ---- check 12: structural cross-checks ----------------------------------

void all_chains(int d, const std::function<void(const Chain&)>& fn) {
    const std::uint32_t full = VertexSet::full(d).mask();
    Chain ch;
    auto rec = [&](auto&& self, std::uint32_t last) -> void {
        std::uint32_t rest = full & ~last;
        for (std::uint32_t x = rest; x; x = (x - 1) & rest) {
            std::uint32_t next = last | x;
            if (next == full) continue;  // proper subsets only
            ch.push_back(VertexSet::from_mask(next));
            fn(ch);
            self(self, next);
            ch.pop_back();
        }
    };
    rec(rec, 0u);
}

long long check_structure(const VerifyOptions& opt, Failure& fail) {
    long long instances = 0;

    // facet-generated face set == face-by-face criterion
    auto faces_probe = [&](const Graph& g) {
        ++instances;
        const int d = g.vertex_count();
        std::set<Chain> closed;
        if (g.edge_count() > 0) closed = face_closure(build_complex(g).facets);
        bool ok = true;
        all_chains(d, [&](const Chain& ch) {
            if (!ok) return;
            if (is_face(g, ch) != static_cast<bool>(closed.count(ch))) ok = false;
        });
        if (!ok)
            fail.note("face criterion disagrees with the facet closure, d=" +
                      std::to_string(d) + " edges=" + format_edge_set(g));
    };
    for (int d = 3; d <= 4; ++d) for_all_graphs(d, faces_probe);
    for (auto [d, count] : {std::pair{5, 20}, std::pair{6, 5}}) {
        auto rng = check_rng(opt, 12, d);
        for (int k = 0; k < count; ++k) faces_probe(random_graph(d, rng));
    }

    // edge spheres against the truncated Boolean oracle
    for (auto [d, count] : {std::pair{4, 0}, std::pair{5, 20}, std::pair{6, 6}}) {
        auto sphere_probe = [&](const Graph& g) {
            FVec oracle = truncated_boolean_order_fvector(g.vertex_count() - 1);
            Int per_edge = factorial(g.vertex_count() - 1);
            for (Edge e : g.edges()) {
                ++instances;
                ColoringComplex s = edge_sphere(g, e);
                if (Int(s.facets.size()) != per_edge) {
                    fail.note("edge sphere has the wrong facet count");
                    return;
                }
                if (f_vector(s) != oracle)
                    fail.note("edge-sphere f-vector differs from the truncated Boolean "
                              "order complex, d=" +
                              std::to_string(g.vertex_count()));
            }
        };
        if (d == 4) {
            for_all_graphs(4, sphere_probe);
        } else {
            auto rng = check_rng(opt, 12, 100 + d);
            for (int k = 0; k < count; ++k) sphere_probe(random_graph(d, rng));
        }
    }

    // pairwise intersections and the separation property
    for (auto [d, count] : {std::pair{4, 0}, std::pair{5, 12}}) {
        auto pair_probe = [&](const Graph& g) {
            FVec oracle = truncated_boolean_order_fvector(g.vertex_count() - 2);
            const auto& es = g.edges();
            for (std::size_t x = 0; x < es.size(); ++x)
                for (std::size_t y = x + 1; y < es.size(); ++y) {
                    ++instances;
                    std::set<Chain> inter = sphere_intersection_faces(g, es[x], es[y]);
                    if (face_set_fvector(inter, g.vertex_count() - 3) != oracle) {
                        fail.note("sphere intersection f-vector differs from the "
                                  "truncated Boolean oracle, d=" +
                                  std::to_string(g.vertex_count()));
                        return;
                    }
                    for (auto [e, f] : {std::pair{es[x], es[y]}, std::pair{es[y], es[x]}}) {
                        SeparationReport rep = edge_sphere_separation(g, e, f);
                        if (!rep.holds) {
                            fail.note("separation failed at d=" +
                                      std::to_string(g.vertex_count()) + ": " + rep.detail);
                            return;
                        }
                    }
                }
        };
        if (d == 4) {
            for_all_graphs(4, pair_probe);
        } else {
            auto rng = check_rng(opt, 12, 200 + d);
            for (int k = 0; k < count; ++k) pair_probe(random_graph(d, rng));
        }
    }
    return instances;
}

// ---- check 13: oracle consistency ---------------------------------------

long long check_oracles(const VerifyOptions& opt, Failure& fail) {
    (void)opt;
    long long instances = 0;
    for (int d = 1; d <= 5; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            IntPolynomial chi = chromatic_polynomial(g);
            for (std::int64_t n = 0; n <= 4; ++n) {
                ++instances;
                if (chi(n) != count_colorings(g, n))
                    fail.note("deletion-contraction disagrees with the coloring count, d=" +
                              std::to_string(d) + " n=" + std::to_string(n));
            }
        });

    for (int d = 1; d <= 5; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            std::vector<Monomial> basics = basic_coloring_monomials(g);
            // every strict chain over all subsets (empty and full allowed),
            // length <= 4 <-> support of a degree <= 4 monomial
            const std::uint32_t full = VertexSet::full(d).mask();
            Chain ch;
            auto rec = [&](auto&& self, std::uint32_t last, bool started) -> void {
                if (started) {
                    Monomial m = Monomial::squarefree(ch);
                    ++instances;
                    if (contains_monomial_by_stable_blocks(g, m) !=
                        contains_monomial_by_divisibility(g, m, basics))
                        fail.note("membership routes disagree on " +
                                  format_monomial(m, d) + ", d=" + std::to_string(d) +
                                  " edges=" + format_edge_set(g));
                    if (ch.size() == 4) return;
                }
                std::uint32_t rest = full & ~last;
                for (std::uint32_t x = rest; x; x = (x - 1) & rest) {
                    ch.push_back(VertexSet::from_mask(last | x));
                    self(self, last | x, true);
                    ch.pop_back();
                }
            };
            // chains starting at the empty set
            ch.push_back(VertexSet());
            rec(rec, 0u, true);
            ch.pop_back();
            // chains starting at a nonempty set
            rec(rec, 0u, false);
        });
    return instances;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    struct Entry {
        int id;
        const char* name;
        CheckFn fn;
    };
    const std::vector<Entry> entries{
        {1, "w-identity", check_w_identity},
        {2, "label-invariance", check_label_invariance},
        {3, "hilbert-identity", check_hilbert},
        {4, "tail-h-vector", check_tail_h},
        {5, "facet-count", check_facet_count},
        {6, "acyclic-orientations", check_acyclic},
        {7, "worked-example", check_worked_example},
        {8, "monomial-codec", check_codec},
        {9, "tree-pair", check_tree_pair},
        {10, "two-edge-pair", check_two_edge_pair},
        {11, "signature-pair", check_signature_pair},
        {12, "structure-crosschecks", check_structure},
        {13, "oracle-consistency", check_oracles},
    };
    std::vector<CheckResult> out;
    for (const Entry& e : entries) {
        if (!opt.only_checks.empty() &&
            std::find(opt.only_checks.begin(), opt.only_checks.end(), e.id) ==
                opt.only_checks.end())
            continue;
        CheckResult r;
        r.id = e.id;
        r.name = e.name;
        Failure fail;
        try {
            r.instances = e.fn(opt, fail);
            r.pass = !fail.failed;
            r.detail = fail.detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    int passed = 0;
    for (const CheckResult& r : results) {
        std::string id = std::to_string(r.id);
        if (id.size() < 2) id = " " + id;
        out += "[" + id + "] " + (r.pass ? "PASS" : "FAIL") + " " + r.name +
               " (instances=" + std::to_string(r.instances) + ")";
        if (!r.pass) out += "\n     " + r.detail;
        out += "\n";
        if (r.pass) ++passed;
    }
    out += "RESULT " + std::string(passed == static_cast<int>(results.size()) ? "PASS" : "FAIL") +
           " (" + std::to_string(passed) + "/" + std::to_string(results.size()) + ")\n";
    return out;
}

}  // namespace chroma
