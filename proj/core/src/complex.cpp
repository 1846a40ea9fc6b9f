#include "chroma/complex.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "chroma/error.hpp"

namespace chroma {

namespace {

void check_chain(const Graph& g, const Chain& ch) {
    const int d = g.vertex_count();
    for (const VertexSet& s : ch) {
        if (s.empty() || s == VertexSet::full(d))
            throw DomainError("chain members must be proper nonempty subsets");
        if (!s.subset_of(VertexSet::full(d)))
            throw DomainError("chain member exceeds the vertex set");
    }
    if (!is_strict_chain(ch)) throw DomainError("sets do not form a strictly nested chain");
}

void check_complex_bounds(const Graph& g, int max_d) {
    if (g.vertex_count() < 3)
        throw DomainError("the coloring complex needs at least 3 vertices");
    if (g.vertex_count() > max_d)
        throw BoundError("complex enumeration guard: d = " +
                         std::to_string(g.vertex_count()) + " > " + std::to_string(max_d));
}

Edge require_edge(const Graph& g, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!std::binary_search(g.edges().begin(), g.edges().end(), e))
        throw DomainError("(" + std::to_string(e.first) + "," + std::to_string(e.second) +
                          ") is not an edge of the graph");
    return e;
}

// All facets owned by one edge: cumulative-union chains of the (d-1)!
// permutations of the other vertices together with the fused pair.
std::vector<Chain> edge_facets(const Graph& g, Edge e) {
    const int d = g.vertex_count();
    std::vector<VertexSet> symbols;
    symbols.push_back(VertexSet::single(e.first) | VertexSet::single(e.second));
    for (int v = 1; v <= d; ++v)
        if (v != e.first && v != e.second) symbols.push_back(VertexSet::single(v));

    std::vector<int> order(symbols.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Chain> out;
    do {
        Chain ch;
        VertexSet acc;
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            acc = acc | symbols[order[k]];
            ch.push_back(acc);
        }
        out.push_back(std::move(ch));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace

bool is_face(const Graph& g, const Chain& ch) {
    check_chain(g, ch);
    VertexSet prev;
    for (const VertexSet& s : ch) {
        if (g.has_edge_within(s - prev)) return true;
        prev = s;
    }
    return g.has_edge_within(prev.complement(g.vertex_count()));
}

ColoringComplex build_complex(const Graph& g, int max_d) {
    check_complex_bounds(g, max_d);
    ColoringComplex c;
    c.d = g.vertex_count();
    if (g.edge_count() == 0) return c;  // void complex

    std::map<Chain, Edge> facet_owner;
    for (Edge e : g.edges())
        for (Chain& ch : edge_facets(g, e)) facet_owner.emplace(std::move(ch), e);

    if (facet_owner.size() !=
        static_cast<std::size_t>(g.edge_count()) *
            static_cast<std::size_t>(factorial(c.d - 1).convert_to<long long>()))
        throw Error("internal: facet classes collided across edges");

    c.facets.reserve(facet_owner.size());
    for (auto& [ch, e] : facet_owner) {
        c.facets.push_back(ch);
        c.facet_edges.push_back(e);
    }
    return c;
}

std::set<Chain> face_closure(const std::vector<Chain>& facets) {
    std::set<Chain> faces;
    for (const Chain& facet : facets) {
        const std::size_t k = facet.size();
        for (std::uint32_t bits = 1; bits < (1u << k); ++bits) {
            Chain sub;
            for (std::size_t i = 0; i < k; ++i)
                if ((bits >> i) & 1u) sub.push_back(facet[i]);
            faces.insert(std::move(sub));
        }
    }
    return faces;
}

FVec face_set_fvector(const std::set<Chain>& faces, int e) {
    FVec f(e + 1);
    f[0] = 1;
    for (const Chain& ch : faces) {
        if (static_cast<int>(ch.size()) > e)
            throw DomainError("face of cardinality " + std::to_string(ch.size()) +
                              " exceeds expected maximum " + std::to_string(e));
        ++f[ch.size()];
    }
    return f;
}

FVec f_vector(const ColoringComplex& c) {
    if (c.void_complex()) return {};
    return face_set_fvector(face_closure(c.facets), c.facet_size());
}

HVec h_vector(const ColoringComplex& c) {
    if (c.void_complex()) return {};
    return f_to_h(f_vector(c), c.facet_size());
}

EulerCharacteristics euler_characteristics(const ColoringComplex& c) {
    if (c.void_complex()) return {0, -1, true};
    FVec f = f_vector(c);
    Int euler = 0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        if ((i - 1) % 2)
            euler -= f[i];
        else
            euler += f[i];
    }
    return {euler, euler - 1, false};
}

ColoringComplex edge_sphere(const Graph& g, Edge e, int max_d) {
    check_complex_bounds(g, max_d);
    e = require_edge(g, e);
    ColoringComplex c;
    c.d = g.vertex_count();
    std::vector<Chain> fs = edge_facets(g, e);
    std::sort(fs.begin(), fs.end());
    c.facets = std::move(fs);
    c.facet_edges.assign(c.facets.size(), e);
    return c;
}

std::set<Chain> sphere_intersection_faces(const Graph& g, Edge e, Edge f, int max_d) {
    check_complex_bounds(g, max_d);
    e = require_edge(g, e);
    f = require_edge(g, f);
    if (e == f) throw DomainError("sphere intersection needs two distinct edges");
    std::set<Chain> ef = face_closure(edge_facets(g, e));
    std::set<Chain> ff = face_closure(edge_facets(g, f));
    std::set<Chain> out;
    for (const Chain& ch : ef)
        if (ff.count(ch)) out.insert(ch);
    return out;
}

FVec truncated_boolean_order_fvector(int m) {
    if (m < 1 || m > 16) throw DomainError("truncated Boolean oracle needs 1 <= m <= 16");
    const std::uint32_t full = (1u << m) - 1;
    // ways[S][k] = chains of length k of proper nonempty subsets ending at S
    std::vector<std::vector<Int>> ways(full + 1, std::vector<Int>(m, 0));
    FVec f(m);  // f[0] = f_{-1}, f[k] = (k)-element chains
    f[0] = 1;
    for (std::uint32_t s = 1; s < full; ++s) {
        ways[s][1] = 1;
        for (int k = 2; k < m; ++k) {
            // strict nonempty subsets t of s
            for (std::uint32_t t = (s - 1) & s; t; t = (t - 1) & s)
                ways[s][k] += ways[t][k - 1];
            // (t runs over all proper submasks of s, including 0; skip 0 via loop form)
        }
        for (int k = 1; k < m; ++k) f[k] += ways[s][k];
    }
    return f;
}

SeparationReport edge_sphere_separation(const Graph& g, Edge e, Edge f, int max_d) {
    check_complex_bounds(g, max_d);
    e = require_edge(g, e);
    f = require_edge(g, f);
    if (e == f) throw DomainError("separation needs two distinct edges");

    std::set<Chain> sphere = face_closure(edge_facets(g, e));
    std::set<Chain> inter = sphere_intersection_faces(g, e, f, max_d);

    std::vector<VertexSet> outside;
    for (const Chain& ch : sphere)
        if (ch.size() == 1 && !inter.count(ch)) outside.push_back(ch[0]);

    const auto [i, j] = f;
    std::set<VertexSet> class_i, class_j;
    for (VertexSet s : outside) {
        bool has_i = s.contains(i), has_j = s.contains(j);
        if (has_i && !has_j)
            class_i.insert(s);
        else if (has_j && !has_i)
            class_j.insert(s);
        else
            return {false, "vertex " + s.to_string() +
                               " outside the intersection contains both or neither of " +
                               std::to_string(i) + "," + std::to_string(j)};
    }
    if (class_i.empty() || class_j.empty())
        return {false, "one of the two separated halves is empty"};

    // components of the sphere's 1-skeleton restricted to `outside`
    std::map<VertexSet, int> comp;
    int ncomp = 0;
    for (VertexSet start : outside) {
        if (comp.count(start)) continue;
        int id = ncomp++;
        std::vector<VertexSet> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            VertexSet v = stack.back();
            stack.pop_back();
            for (VertexSet u : outside) {
                if (comp.count(u)) continue;
                Chain edge_chain = v.proper_subset_of(u) ? Chain{v, u} : Chain{u, v};
                if (!u.proper_subset_of(v) && !v.proper_subset_of(u)) continue;
                if (!sphere.count(edge_chain)) continue;
                comp[u] = id;
                stack.push_back(u);
            }
        }
    }
    if (ncomp != 2)
        return {false, "expected 2 components off the intersection, found " +
                           std::to_string(ncomp)};
    int ci = comp[*class_i.begin()];
    for (VertexSet s : class_i)
        if (comp[s] != ci) return {false, "half containing " + std::to_string(i) + " is split"};
    for (VertexSet s : class_j)
        if (comp[s] == ci) return {false, "the two halves are connected to each other"};
    return {true, ""};
}

namespace {

struct IndexedComplex {
    std::vector<VertexSet> labels;           // vertex id -> subset label
    std::vector<std::vector<int>> facets;    // each sorted by vertex id
    std::vector<std::vector<int>> by_vertex; // vertex id -> facet indices
};

IndexedComplex index_complex(const ColoringComplex& c) {
    IndexedComplex ic;
    std::set<VertexSet> verts;
    for (const Chain& f : c.facets)
        for (VertexSet s : f) verts.insert(s);
    ic.labels.assign(verts.begin(), verts.end());
    std::map<VertexSet, int> id;
    for (std::size_t k = 0; k < ic.labels.size(); ++k) id[ic.labels[k]] = static_cast<int>(k);
    ic.by_vertex.resize(ic.labels.size());
    for (const Chain& f : c.facets) {
        std::vector<int> fv;
        for (VertexSet s : f) fv.push_back(id[s]);
        std::sort(fv.begin(), fv.end());
        ic.facets.push_back(std::move(fv));
    }
    std::sort(ic.facets.begin(), ic.facets.end());
    for (std::size_t fi = 0; fi < ic.facets.size(); ++fi)
        for (int v : ic.facets[fi]) ic.by_vertex[v].push_back(static_cast<int>(fi));
    return ic;
}

// Iterated refinement of vertex colors by the multiset of facet color
// signatures through each vertex; the initial color is the per-cardinality
// face-degree profile (equivalently the link f-vector).
std::vector<int> wl_colors(const IndexedComplex& ic) {
    const int nv = static_cast<int>(ic.labels.size());
    std::vector<std::vector<Int>> initial(nv);
    {
        std::set<std::vector<int>> faces;
        for (const auto& f : ic.facets) {
            const std::size_t k = f.size();
            for (std::uint32_t bits = 1; bits < (1u << k); ++bits) {
                std::vector<int> sub;
                for (std::size_t t = 0; t < k; ++t)
                    if ((bits >> t) & 1u) sub.push_back(f[t]);
                faces.insert(std::move(sub));
            }
        }
        std::size_t max_card = 0;
        for (const auto& fc : faces) max_card = std::max(max_card, fc.size());
        for (int v = 0; v < nv; ++v) initial[v].assign(max_card + 1, 0);
        for (const auto& fc : faces)
            for (int v : fc) ++initial[v][fc.size()];
    }
    std::vector<int> col(nv);
    {
        std::map<std::vector<Int>, int> rank;
        for (int v = 0; v < nv; ++v) rank.emplace(initial[v], 0);
        int r = 0;
        for (auto& [sig, id] : rank) id = r++;
        for (int v = 0; v < nv; ++v) col[v] = rank[initial[v]];
    }
    for (int round = 0; round < nv; ++round) {
        std::vector<std::vector<std::vector<int>>> sig(nv);
        for (int v = 0; v < nv; ++v) {
            for (int fi : ic.by_vertex[v]) {
                std::vector<int> fsig;
                for (int u : ic.facets[fi]) fsig.push_back(col[u]);
                std::sort(fsig.begin(), fsig.end());
                sig[v].push_back(std::move(fsig));
            }
            std::sort(sig[v].begin(), sig[v].end());
            sig[v].push_back({col[v]});
        }
        std::map<std::vector<std::vector<int>>, int> rank;
        for (int v = 0; v < nv; ++v) rank.emplace(sig[v], 0);
        int r = 0;
        for (auto& [s, id] : rank) id = r++;
        std::vector<int> next(nv);
        for (int v = 0; v < nv; ++v) next[v] = rank[sig[v]];
        if (next == col) break;
        col = std::move(next);
    }
    return col;
}

}  // namespace

IsoResult complexes_isomorphic(const ColoringComplex& a, const ColoringComplex& b,
                               int max_combined_vertices) {
    IndexedComplex ia = index_complex(a);
    IndexedComplex ib = index_complex(b);
    const int na = static_cast<int>(ia.labels.size());
    const int nb = static_cast<int>(ib.labels.size());
    if (na + nb > max_combined_vertices)
        throw BoundError("isomorphism search guard: " + std::to_string(na + nb) +
                         " combined vertices > " + std::to_string(max_combined_vertices));
    if (na != nb || ia.facets.size() != ib.facets.size()) return {};
    {
        auto sizes = [](const IndexedComplex& ic) {
            std::vector<std::size_t> s;
            for (const auto& f : ic.facets) s.push_back(f.size());
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sizes(ia) != sizes(ib)) return {};
    }

    std::vector<int> ca = wl_colors(ia), cb = wl_colors(ib);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return {};
    }

    // pair counts: #facets containing both vertices
    auto pair_counts = [](const IndexedComplex& ic, int n) {
        std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
        for (const auto& f : ic.facets)
            for (std::size_t x = 0; x < f.size(); ++x)
                for (std::size_t y = x + 1; y < f.size(); ++y) {
                    ++p[f[x]][f[y]];
                    ++p[f[y]][f[x]];
                }
        return p;
    };
    auto pa = pair_counts(ia, na), pb = pair_counts(ib, nb);

    std::vector<std::vector<int>> candidates(na);
    for (int v = 0; v < na; ++v)
        for (int w = 0; w < nb; ++w)
            if (ca[v] == cb[w]) candidates[v].push_back(w);

    // most constrained vertices first
    std::vector<int> order(na);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (candidates[x].size() != candidates[y].size())
            return candidates[x].size() < candidates[y].size();
        return x < y;
    });

    std::set<std::vector<int>> target_facets(ib.facets.begin(), ib.facets.end());
    std::vector<int> map_ab(na, -1);
    std::vector<bool> used(nb, false);

    auto dfs = [&](auto&& self, int idx) -> bool {
        if (idx == na) {
            std::set<std::vector<int>> image;
            for (const auto& f : ia.facets) {
                std::vector<int> im;
                for (int v : f) im.push_back(map_ab[v]);
                std::sort(im.begin(), im.end());
                if (!target_facets.count(im)) return false;
                image.insert(std::move(im));
            }
            return image.size() == target_facets.size();
        }
        int v = order[idx];
        for (int w : candidates[v]) {
            if (used[w]) continue;
            bool ok = true;
            for (int t = 0; t < idx; ++t) {
                int u = order[t];
                if (pa[v][u] != pb[w][map_ab[u]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_ab[v] = w;
            used[w] = true;
            if (self(self, idx + 1)) return true;
            used[w] = false;
            map_ab[v] = -1;
        }
        return false;
    };

    if (!dfs(dfs, 0)) return {};
    std::map<VertexSet, VertexSet> witness;
    for (int v = 0; v < na; ++v) witness[ia.labels[v]] = ib.labels[map_ab[v]];
    return {true, std::move(witness)};
}

HVec nontruncated_h_vector(const Graph& g, int max_d) {
    check_complex_bounds(g, max_d);
    const int d = g.vertex_count();
    IntPolynomial a = eulerian_polynomial(d);
    HVec out(d);
    for (int jj = 0; jj < d; ++jj) out[jj] = a.coeff(jj + 1);
    if (g.edge_count() > 0) {
        HVec h = h_vector(build_complex(g, max_d));
        for (std::size_t k = 0; k < h.size(); ++k) out[k + 1] += h[k];
    }
    return out;
}

HVec nontruncated_h_vector_direct(const Graph& g, int max_d) {
    check_complex_bounds(g, std::min(max_d, 6));
    const int d = g.vertex_count();

    std::vector<Chain> facets;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Chain ch;
        VertexSet acc;
        for (int k = 0; k + 1 < d; ++k) {
            acc.insert(perm[k]);
            ch.push_back(acc);
        }
        facets.push_back(std::move(ch));
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (g.edge_count() > 0) {
        for (Chain ch : build_complex(g, 6).facets) {
            ch.push_back(VertexSet::full(d));
            facets.push_back(std::move(ch));
        }
    }
    FVec f = face_set_fvector(face_closure(facets), d - 1);
    return f_to_h(f, d - 1);
}

std::string complex_to_json(const ColoringComplex& c, int indent) {
    nlohmann::ordered_json j;
    j["d"] = c.d;
    auto facets = nlohmann::ordered_json::array();
    for (const Chain& ch : c.facets) {
        auto chain = nlohmann::ordered_json::array();
        for (VertexSet s : ch) chain.push_back(s.elements());
        facets.push_back(std::move(chain));
    }
    j["facets"] = std::move(facets);
    auto to_array = [](const std::vector<Int>& v) {
        auto a = nlohmann::ordered_json::array();
        for (const Int& x : v) a.push_back(x.convert_to<long long>());
        return a;
    };
    j["f"] = to_array(f_vector(c));
    j["h"] = to_array(h_vector(c));
    j["euler"] = euler_characteristics(c).euler.convert_to<long long>();
    auto edge_map = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
        auto [x, y] = c.facet_edges[i];
        std::string key = std::to_string(x) + "-" + std::to_string(y);
        if (!edge_map.contains(key)) edge_map[key] = nlohmann::ordered_json::array();
        edge_map[key].push_back(i);
    }
    // keys in sorted edge order
    nlohmann::ordered_json sorted_map = nlohmann::ordered_json::object();
    std::vector<std::string> keys;
    for (auto& [k, v] : edge_map.items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const std::string& a, const std::string& b) {
        auto parse = [](const std::string& s) {
            auto dash = s.find('-');
            return std::pair<int, int>(std::stoi(s.substr(0, dash)),
                                       std::stoi(s.substr(dash + 1)));
        };
        return parse(a) < parse(b);
    });
    for (const std::string& k : keys) sorted_map[k] = edge_map[k];
    j["edges_to_facets"] = std::move(sorted_map);
    return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace chroma
