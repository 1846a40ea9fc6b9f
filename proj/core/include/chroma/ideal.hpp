#ifndef CHROMA_IDEAL_HPP
#define CHROMA_IDEAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/ints.hpp"
#include "chroma/vertex_set.hpp"

namespace chroma {

// A monomial of the face ring: indeterminates x_S over a strictly nested
// chain of subsets (the empty set and the full set are allowed members),
// each with a positive exponent.  The unit monomial has an empty chain.
struct Monomial {
    Chain chain;                         // ascending by inclusion
    std::vector<std::int64_t> exponents; // same length, all >= 1

    static Monomial unit() { return {}; }
    static Monomial squarefree(Chain ch) {
        return {ch, std::vector<std::int64_t>(ch.size(), 1)};
    }

    bool is_unit() const { return chain.empty(); }
    bool is_squarefree() const {
        for (auto e : exponents)
            if (e != 1) return false;
        return true;
    }
    std::int64_t degree() const {
        std::int64_t s = 0;
        for (auto e : exponents) s += e;
        return s;
    }
    // throws DomainError unless the chain is strictly nested inside {1..d}
    // with positive exponents
    void validate(int d) const;

    auto operator<=>(const Monomial&) const = default;
};

// Text syntax: `x{2,5}^3 * x{}^2 * x{2,3,5}`, `{}` is the empty set, `{*}`
// the full vertex set; whitespace-insensitive; `1` is the unit monomial.
Monomial parse_monomial(std::string_view text, int d);
std::string format_monomial(const Monomial& m, int d);

// One squarefree monomial per permutation: the cumulative unions of the
// permutation's blocks, dropping the final block.  A permutation with a
// single block contributes the unit monomial (then the ideal is the whole
// ring).  Result is deduplicated and sorted.
std::vector<Monomial> basic_coloring_monomials(const Graph& g,
                                               std::int64_t max_perms = limits::max_permutations);

// The unique minimal generating set: basic monomials whose support chain
// contains no other basic monomial's support chain.
std::vector<Monomial> minimal_generators(const Graph& g,
                                         std::int64_t max_perms = limits::max_permutations);

// Membership in the coloring ideal, decided by the difference-block
// criterion: every block of the support chain, including the remainder
// above the largest chain member, is stable.
bool contains_monomial(const Graph& g, const Monomial& m);
bool contains_monomial_by_stable_blocks(const Graph& g, const Monomial& m);
// Independent route: some basic monomial's support chain is a subset of
// m's support chain.
bool contains_monomial_by_divisibility(const Graph& g, const Monomial& m,
                                       const std::vector<Monomial>& basics);

// A degree-n ideal member <-> a proper coloring with n+1 colors.
Coloring decode_monomial(const Graph& g, const Monomial& m);
Monomial encode_coloring(const Graph& g, const Coloring& c);

// Number of degree-n monomials of the coloring ideal, by direct chain
// enumeration; equals chi(n+1).
Int count_degree_monomials(const Graph& g, std::int64_t n,
                           int max_d = limits::max_ideal_vertices,
                           std::int64_t max_degree = limits::max_ideal_degree);

// Label-free invariants of the minimal generating set; isomorphic coloring
// complexes force equal stats.
struct GenStats {
    std::map<std::int64_t, Int> degree_histogram;
    std::vector<Int> indeterminate_multiplicities;  // sorted multiset

    bool operator==(const GenStats&) const = default;
};
GenStats generator_stats(const Graph& g, std::int64_t max_perms = limits::max_permutations);
std::string format_gen_stats(const GenStats& s);

}  // namespace chroma

#endif
