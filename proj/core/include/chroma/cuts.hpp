#ifndef CHROMA_CUTS_HPP
#define CHROMA_CUTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/polynomial.hpp"

namespace chroma {

// Cut statistics of a permutation a_1..a_d with respect to a graph:
//   path_lengths[k-1] = length of the longest increasing-position path in G
//     ending at position k,
//   cuts = the positions p in {0..d-1} with p = 0, or l(p) < l(p+1), or
//     l(p) = l(p+1) and a_p < a_{p+1},
//   blocks = the vertex sets between consecutive cuts.  Every block is a
//     stable set.
struct CutProfile {
    std::vector<int> perm;
    std::vector<int> path_lengths;
    std::vector<int> cuts;          // ascending, always starts with 0
    std::vector<VertexSet> blocks;  // one per cut

    int cut_count() const { return static_cast<int>(cuts.size()); }
    // blocks minus the last one (possibly empty)
    std::vector<VertexSet> short_blocks() const {
        return {blocks.begin(), blocks.empty() ? blocks.end() : blocks.end() - 1};
    }
};

CutProfile cut_profile(const Graph& g, const std::vector<int>& perm);

// Multi-line fixed format used by golden tests:
//   perm 5 2 3 6 4 1 7
//   ell 0 0 1 0 2 1 1
//   cuts 0 2 4 6
//   blocks {2,5} {3,6} {1,4} {7}
std::string format_cut_profile(const CutProfile& p);

// Coefficient k = number of permutations of S_d with exactly k cuts.
// Enumerates S_d in lexicographic order; throws BoundError if d! exceeds
// max_perms.
using WPolynomial = IntPolynomial;
WPolynomial w_polynomial(const Graph& g, std::int64_t max_perms = limits::max_permutations);

// The canonical permutation of a proper coloring: nonempty color classes in
// increasing color order, each class sorted by decreasing path length (then
// decreasing label), path lengths taken over the prefix built so far.
// Every cut of the result lands on a class boundary; extra_cuts are the
// boundaries that are not cuts.
struct CanonicalPermutation {
    CutProfile profile;
    std::vector<int> class_boundaries;  // positions between classes (excluding 0 and d)
    std::vector<int> extra_cuts;        // class_boundaries minus profile.cuts
};
CanonicalPermutation canonical_permutation(const Graph& g, const Coloring& c);

// Checks sum_{pi in S_d} C(n + d - c(pi), d) == chi_G(n) exactly.
// On mismatch, *detail (if given) receives both values.
bool chromatic_identity_check(const Graph& g, std::int64_t n, std::string* detail = nullptr,
                              std::int64_t max_perms = limits::max_permutations);

}  // namespace chroma

#endif
