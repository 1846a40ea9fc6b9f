#ifndef CHROMA_COMPLEX_HPP
#define CHROMA_COMPLEX_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/poly_lab.hpp"
#include "chroma/vertex_set.hpp"

namespace chroma {

// The coloring complex of a graph on d >= 3 vertices, in the truncated
// convention: complex vertices are proper nonempty subsets of {1..d}, faces
// are strictly nested chains of them, and each facet is the cumulative-union
// chain of an edge-permutation (length d-2).  The complex of an edgeless
// graph is void: it has no faces at all, not even the empty one.
struct ColoringComplex {
    int d = 0;
    std::vector<Chain> facets;      // sorted, deduplicated
    std::vector<Edge> facet_edges;  // facet_edges[i] = the edge owning facets[i]

    bool void_complex() const { return facets.empty(); }
    // maximum face cardinality (d-2 for a nonvoid complex)
    int facet_size() const { return d - 2; }
};

// A chain is a face iff some difference block (including the remainder above
// the largest chain member) contains an edge.  The empty chain is a face iff
// the graph has an edge.
bool is_face(const Graph& g, const Chain& ch);

ColoringComplex build_complex(const Graph& g, int max_d = limits::max_complex_vertices);

// All nonempty faces: subchains of facets, deduplicated.
std::set<Chain> face_closure(const std::vector<Chain>& facets);

// f-vector of a face set, entry 0 = f_{-1}; `e` fixes the length to e+1.
FVec face_set_fvector(const std::set<Chain>& faces, int e);

// For the whole complex: f has entries f_{-1}..f_{d-3}; void complex gives
// an empty vector.
FVec f_vector(const ColoringComplex& c);
HVec h_vector(const ColoringComplex& c);

struct EulerCharacteristics {
    Int euler;    // sum (-1)^i f_i over i >= 0
    Int reduced;  // euler - 1
    bool void_complex;
};
EulerCharacteristics euler_characteristics(const ColoringComplex& c);

// The subcomplex generated by one edge's (d-1)! facets: a (d-3)-sphere
// isomorphic to the order complex of the truncated Boolean algebra on d-1
// elements.
ColoringComplex edge_sphere(const Graph& g, Edge e, int max_d = limits::max_complex_vertices);

// Intersection of the face sets of two edge-spheres (a (d-4)-sphere).
// Includes the empty face via the returned f-vector only.
std::set<Chain> sphere_intersection_faces(const Graph& g, Edge e, Edge f,
                                          int max_d = limits::max_complex_vertices);

// f-vector of the order complex of the Boolean algebra on m elements with
// bottom and top removed: independent counting oracle for the sphere claims.
FVec truncated_boolean_order_fvector(int m);

// Removing the intersection with the f-sphere must split the e-sphere's
// remaining vertices into exactly two connected halves: the vertices
// containing i-but-not-j and those containing j-but-not-i, where f = (i, j).
struct SeparationReport {
    bool holds = false;
    std::string detail;
};
SeparationReport edge_sphere_separation(const Graph& g, Edge e, Edge f,
                                        int max_d = limits::max_complex_vertices);

// Exact isomorphism decision with a verified witness: a bijection between
// the complexes' vertex sets mapping facets to facets bijectively.
struct IsoResult {
    bool isomorphic = false;
    std::optional<std::map<VertexSet, VertexSet>> witness;
};
IsoResult complexes_isomorphic(const ColoringComplex& a, const ColoringComplex& b,
                               int max_combined_vertices = limits::max_iso_vertices);

// h-vector of the variant complex that keeps the full vertex set as a cone
// point: the Eulerian vector of degree d plus the coloring-complex h-vector
// shifted one step right.  Length d (entries h_0..h_{d-1}).
HVec nontruncated_h_vector(const Graph& g, int max_d = limits::max_complex_vertices);
// Same vector by direct construction of that complex (all d! complete flags
// plus the cone facets); cross-check for the formula.
HVec nontruncated_h_vector_direct(const Graph& g, int max_d = 6);

// {"d":..,"facets":..,"f":..,"h":..,"euler":..,"edges_to_facets":..} with
// stable key order and sorted lists; see README for the schema.
std::string complex_to_json(const ColoringComplex& c, int indent = -1);

}  // namespace chroma

#endif
