#include "chroma/graph.hpp"

#include <algorithm>
#include <numeric>

#include "chroma/error.hpp"

namespace chroma {

Graph Graph::from_edges(int d, std::vector<Edge> edges) {
    if (d < 1 || d > 31) throw DomainError("vertex count must be in 1..31");
    Graph g;
    g.d_ = d;
    g.adj_.assign(d + 1, VertexSet());
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > d) throw DomainError("edge endpoint out of range 1..d");
        if (i == j) throw DomainError("loop edge " + std::to_string(i));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [i, j] : edges) {
        g.adj_[i].insert(j);
        g.adj_[j].insert(i);
    }
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge_within(VertexSet s) const {
    for (int v : s.elements())
        if (adj_[v].intersects(s)) return true;
    return false;
}

bool is_stable(const Graph& g, VertexSet s) { return !g.has_edge_within(s); }

bool Coloring::is_proper(const Graph& g) const {
    if (palette < 1) return false;
    if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
    for (int c : assignment)
        if (c < 1 || c > palette) return false;
    for (auto [i, j] : g.edges())
        if (color(i) == color(j)) return false;
    return true;
}

std::vector<VertexSet> Coloring::classes() const {
    std::vector<VertexSet> cls(palette);
    for (std::size_t i = 0; i < assignment.size(); ++i)
        cls[assignment[i] - 1].insert(static_cast<int>(i) + 1);
    return cls;
}

void for_each_proper_coloring(const Graph& g, int n,
                              const std::function<void(const std::vector<int>&)>& fn) {
    const int d = g.vertex_count();
    if (n < 1) return;
    std::vector<int> col(d, 0);
    // Backtracking over vertices 1..d; prefixes with a monochromatic edge
    // are never extended, so only proper colorings reach depth d.
    auto rec = [&](auto&& self, int v) -> void {
        if (v > d) {
            fn(col);
            return;
        }
        VertexSet earlier = g.neighbors(v) & VertexSet::full(v - 1);
        for (int c = 1; c <= n; ++c) {
            bool ok = true;
            for (int u : earlier.elements())
                if (col[u - 1] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[v - 1] = c;
            self(self, v + 1);
        }
        col[v - 1] = 0;
    };
    rec(rec, 1);
}

namespace {

void check_coloring_guard(const Graph& g, std::int64_t n, std::int64_t max_maps) {
    // exact n^d guard, no overflow
    Int total = 1;
    for (int i = 0; i < g.vertex_count(); ++i) total *= n;
    if (total > max_maps)
        throw BoundError("coloring enumeration guard exceeded: n^d = " + total.str() +
                         " > " + std::to_string(max_maps));
}

}  // namespace

Int count_colorings(const Graph& g, std::int64_t n, std::int64_t max_maps) {
    if (n < 0) throw DomainError("color count must be nonnegative");
    check_coloring_guard(g, n, max_maps);
    if (n == 0) return 0;
    Int count = 0;
    for_each_proper_coloring(g, static_cast<int>(n),
                             [&](const std::vector<int>&) { ++count; });
    return count;
}

ClassSignature chromatic_class_signature(const Graph& g, std::int64_t n,
                                         std::int64_t max_maps) {
    if (n < 0) throw DomainError("color count must be nonnegative");
    check_coloring_guard(g, n, max_maps);
    ClassSignature sig;
    if (n == 0) return sig;
    for_each_proper_coloring(g, static_cast<int>(n), [&](const std::vector<int>& col) {
        std::vector<int> sizes(n, 0);
        for (int c : col) ++sizes[c - 1];
        std::vector<int> part;
        for (int s : sizes)
            if (s > 0) part.push_back(s);
        std::sort(part.begin(), part.end(), std::greater<int>());
        ++sig[part];
    });
    return sig;
}

namespace {

using EdgeList = std::vector<Edge>;

struct DcKey {
    int d;
    EdgeList edges;
    bool operator<(const DcKey& o) const {
        return std::tie(d, edges) < std::tie(o.d, o.edges);
    }
};

bool is_forest(int d, const EdgeList& edges, int& components) {
    std::vector<int> parent(d + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    components = d;
    for (auto [i, j] : edges) {
        int a = find(i), b = find(j);
        if (a == b) return false;
        parent[a] = b;
        --components;
    }
    return true;
}

// Deletion-contraction on the labeled edge list.  Contraction merges j into
// i and compacts labels to 1..d-1 so that keys stay canonical.
IntPolynomial dc(int d, EdgeList edges, std::map<DcKey, IntPolynomial>& memo) {
    if (edges.empty()) return IntPolynomial::monomial(d);

    int comps = 0;
    if (is_forest(d, edges, comps)) {
        // n^c (n-1)^E
        IntPolynomial r = IntPolynomial::monomial(comps);
        IntPolynomial nm1(std::vector<Int>{-1, 1});
        for (std::size_t i = 0; i < edges.size(); ++i) r = r * nm1;
        return r;
    }
    if (static_cast<std::int64_t>(edges.size()) ==
        static_cast<std::int64_t>(d) * (d - 1) / 2) {
        // complete graph: n(n-1)...(n-d+1)
        IntPolynomial r = IntPolynomial::constant(1);
        for (int i = 0; i < d; ++i)
            r = r * IntPolynomial(std::vector<Int>{-i, 1});
        return r;
    }

    DcKey key{d, edges};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    auto [ci, cj] = edges.front();

    EdgeList deleted(edges.begin() + 1, edges.end());

    EdgeList contracted;
    contracted.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == ci && j == cj) continue;
        auto remap = [&](int v) {
            if (v == cj) v = ci;
            return v > cj ? v - 1 : v;
        };
        int a = remap(i), b = remap(j);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        contracted.emplace_back(a, b);
    }
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());

    IntPolynomial result = dc(d, std::move(deleted), memo) - dc(d - 1, std::move(contracted), memo);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& g) {
    std::map<DcKey, IntPolynomial> memo;
    return dc(g.vertex_count(), g.edges(), memo);
}

IntPolynomial chromatic_polynomial_by_stable_partitions(const Graph& g) {
    const int d = g.vertex_count();
    if (d > 16) throw BoundError("stable-partition table needs d <= 16");
    const std::uint32_t all = VertexSet::full(d).mask();
    std::vector<bool> stable(all + 1);
    for (std::uint32_t m = 0; m <= all; ++m)
        stable[m] = is_stable(g, VertexSet::from_mask(m));

    // partitions[S][k] = #partitions of S into k nonempty stable blocks
    std::vector<std::vector<Int>> parts(all + 1, std::vector<Int>(d + 1));
    parts[0][0] = 1;
    for (std::uint32_t s = 1; s <= all; ++s) {
        std::uint32_t low = s & (~s + 1);  // block containing the lowest vertex
        for (std::uint32_t t = s; t; t = (t - 1) & s) {
            if (!(t & low) || !stable[t]) continue;
            std::uint32_t rest = s ^ t;
            for (int k = 1; k <= d; ++k)
                if (parts[rest][k - 1] != 0) parts[s][k] += parts[rest][k - 1];
        }
    }
    IntPolynomial chi;
    for (int k = 1; k <= d; ++k) {
        if (parts[all][k] == 0) continue;
        IntPolynomial ff = IntPolynomial::constant(parts[all][k]);
        for (int i = 0; i < k; ++i)
            ff = ff * IntPolynomial(std::vector<Int>{-i, 1});
        chi = chi + ff;
    }
    return chi;
}

OrientationCount count_acyclic_orientations(const Graph& g, int max_edges) {
    const int e = g.edge_count();
    if (e > max_edges || e > 30) {
        Int viaChi = chromatic_polynomial(g)(Int(-1));
        if (g.vertex_count() % 2) viaChi = -viaChi;
        return {viaChi, false};
    }
    const int d = g.vertex_count();
    Int count = 0;
    for (std::uint32_t bits = 0; bits < (1u << e); ++bits) {
        // orientation: bit k set -> edge k directed j -> i
        std::vector<VertexSet> out(d + 1);
        for (int k = 0; k < e; ++k) {
            auto [i, j] = g.edges()[k];
            if ((bits >> k) & 1u)
                out[j].insert(i);
            else
                out[i].insert(j);
        }
        // Kahn peeling: acyclic iff all vertices get removed
        std::vector<int> indeg(d + 1, 0);
        for (int v = 1; v <= d; ++v)
            for (int u : out[v].elements()) ++indeg[u];
        std::vector<int> queue;
        for (int v = 1; v <= d; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int removed = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++removed;
            for (int u : out[v].elements())
                if (--indeg[u] == 0) queue.push_back(u);
        }
        if (removed == d) ++count;
    }
    return {count, true};
}

Graph relabel(const Graph& g, const std::vector<int>& sigma) {
    const int d = g.vertex_count();
    if (static_cast<int>(sigma.size()) != d)
        throw DomainError("relabeling must list an image for every vertex");
    std::vector<bool> seen(d + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > d || seen[v]) throw DomainError("relabeling is not a bijection of 1..d");
        seen[v] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [i, j] : g.edges()) edges.emplace_back(sigma[i - 1], sigma[j - 1]);
    return Graph::from_edges(d, std::move(edges));
}

}  // namespace chroma
