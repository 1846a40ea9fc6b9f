#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chroma/ints.hpp"
#include "chroma/polynomial.hpp"
#include "chroma/vertex_set.hpp"

namespace chroma {

using Edge = std::pair<int, int>;  // (i, j) with i < j, 1-based

// Default enumeration guards.  All of them can be overridden per call; none
// is baked into an algorithm.
namespace limits {
inline constexpr int max_enum_vertices = 10;               // S_d sweeps
inline constexpr std::int64_t max_permutations = 3628800;  // 10!
inline constexpr std::int64_t max_coloring_maps = 100000000;  // n^d guard
inline constexpr int max_orientation_edges = 25;              // 2^E guard
inline constexpr int max_ideal_vertices = 8;
inline constexpr std::int64_t max_ideal_degree = 8;
inline constexpr int max_complex_vertices = 8;
inline constexpr int max_iso_vertices = 64;  // combined, both complexes
}  // namespace limits

// Simple labeled graph on {1..d}.  No loops, no multiple edges.
class Graph {
public:
    static Graph from_edges(int d, std::vector<Edge> edges);

    int vertex_count() const { return d_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int i, int j) const { return adj_[i].contains(j); }
    VertexSet vertices() const { return VertexSet::full(d_); }

    // true iff some edge has both endpoints inside s
    bool has_edge_within(VertexSet s) const;

    bool operator==(const Graph& o) const { return d_ == o.d_ && edges_ == o.edges_; }

private:
    int d_ = 0;
    std::vector<VertexSet> adj_;  // index 0 unused
    std::vector<Edge> edges_;     // sorted, deduplicated
};

// A proper coloring: adjacent vertices get distinct colors from {1..palette};
// not every color has to be used.
struct Coloring {
    int palette = 0;
    std::vector<int> assignment;  // assignment[v-1] = color of vertex v

    int color(int v) const { return assignment[v - 1]; }
    bool is_proper(const Graph& g) const;
    // classes()[c-1] = vertices of color c (possibly empty)
    std::vector<VertexSet> classes() const;
};

bool is_stable(const Graph& g, VertexSet s);

// Exhaustive count of proper colorings with n available colors.
Int count_colorings(const Graph& g, std::int64_t n,
                    std::int64_t max_maps = limits::max_coloring_maps);

// Calls fn(assignment) for every proper coloring with palette n, in
// lexicographic order of the assignment vector.
void for_each_proper_coloring(const Graph& g, int n,
                              const std::function<void(const std::vector<int>&)>& fn);

// Chromatic polynomial by deletion-contraction with memoization on the
// canonical (sorted, labeled) edge list.
IntPolynomial chromatic_polynomial(const Graph& g);

// Independent cross-check: chi via counting partitions into stable sets
// (subset-sum dynamic programming over 3^d pairs).
IntPolynomial chromatic_polynomial_by_stable_partitions(const Graph& g);

struct OrientationCount {
    Int count;
    bool exhaustive;  // false when the 2^E guard forced the chi(-1) formula
};
OrientationCount count_acyclic_orientations(const Graph& g,
                                            int max_edges = limits::max_orientation_edges);

// For each multiset of nonempty color-class sizes (partition of d, sorted
// descending), the number of proper colorings with colors from {1..n}
// realizing it.  n = d determines the signature.
using ClassSignature = std::map<std::vector<int>, Int>;
ClassSignature chromatic_class_signature(const Graph& g, std::int64_t n,
                                         std::int64_t max_maps = limits::max_coloring_maps);

// sigma[v-1] = image of vertex v; must be a bijection of {1..d}
Graph relabel(const Graph& g, const std::vector<int>& sigma);

}  // namespace chroma

#endif
