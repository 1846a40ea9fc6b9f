#include <random>

#include "doctest.h"

#include "chroma/cuts.hpp"
#include "chroma/error.hpp"
#include "chroma/poly_lab.hpp"
#include "chroma/verify.hpp"

using namespace chroma;

namespace {

// Definitional oracle for the path lengths: maximum number of edges over all
// increasing-position vertex sequences ending at position k that trace a
// path in the graph.  Exponential; for tests only.
int longest_path_brute(const Graph& g, const std::vector<int>& perm, int k) {
    int best = 0;
    const std::uint32_t before = k > 0 ? (1u << k) - 1 : 0;
    for (std::uint32_t sub = before;; sub = (sub - 1) & before) {
        // positions in `sub` ascending, then k
        std::vector<int> seq;
        for (int p = 0; p < k; ++p)
            if ((sub >> p) & 1u) seq.push_back(p);
        seq.push_back(k);
        bool is_path = true;
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (!g.adjacent(perm[seq[i - 1]], perm[seq[i]])) {
                is_path = false;
                break;
            }
        if (is_path) best = std::max(best, int(seq.size()) - 1);
        if (sub == 0) break;
    }
    return best;
}

VertexSet vs(std::initializer_list<int> elems) {
    VertexSet s;
    for (int v : elems) s.insert(v);
    return s;
}

}  // namespace

TEST_CASE("cut profile of the worked 7-vertex example") {
    CutProfile p = cut_profile(fixture_worked7(), {5, 2, 3, 6, 4, 1, 7});
    CHECK(p.path_lengths == std::vector<int>{0, 0, 1, 0, 2, 1, 1});
    CHECK(p.cuts == std::vector<int>{0, 2, 4, 6});
    CHECK(p.blocks == std::vector<VertexSet>{vs({2, 5}), vs({3, 6}), vs({1, 4}), vs({7})});
    CHECK(p.short_blocks() == std::vector<VertexSet>{vs({2, 5}), vs({3, 6}), vs({1, 4})});
    CHECK(format_cut_profile(p) ==
          "perm 5 2 3 6 4 1 7\n"
          "ell 0 0 1 0 2 1 1\n"
          "cuts 0 2 4 6\n"
          "blocks {2,5} {3,6} {1,4} {7}\n");
}

TEST_CASE("cut profile edge cases") {
    // decreasing permutation on the edgeless graph: only the mandatory cut
    Graph e5 = Graph::from_edges(5, {});
    CutProfile p = cut_profile(e5, {5, 4, 3, 2, 1});
    CHECK(p.cuts == std::vector<int>{0});
    CHECK(p.blocks.size() == 1);
    CHECK(p.short_blocks().empty());

    Graph e3 = Graph::from_edges(3, {{1, 2}});
    CutProfile q = cut_profile(e3, {3, 1, 2});
    CHECK(q.path_lengths == std::vector<int>{0, 0, 1});
    CHECK(q.cuts == std::vector<int>{0, 2});
    CHECK(q.blocks == std::vector<VertexSet>{vs({1, 3}), vs({2})});

    CHECK_THROWS_AS(cut_profile(e3, {1, 2}), DomainError);
    CHECK_THROWS_AS(cut_profile(e3, {1, 2, 2}), DomainError);
}

TEST_CASE("path lengths match the definitional brute force") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        int d = 2 + int(rng() % 6);  // up to 7
        Graph g = random_graph(d, rng);
        std::vector<int> perm = random_permutation(d, rng);
        CutProfile p = cut_profile(g, perm);
        for (int k = 0; k < d; ++k) CHECK(p.path_lengths[k] == longest_path_brute(g, perm, k));
    }
}

TEST_CASE("block structure invariants") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 40; ++rep) {
        int d = 2 + int(rng() % 5);
        Graph g = random_graph(d, rng);
        std::vector<int> perm = random_permutation(d, rng);
        CutProfile p = cut_profile(g, perm);
        // blocks partition the vertices and are stable
        VertexSet all;
        for (const VertexSet& b : p.blocks) {
            CHECK_FALSE(all.intersects(b));
            CHECK(is_stable(g, b));
            all = all | b;
        }
        CHECK(all == VertexSet::full(d));
        // inside a block: path lengths weakly decrease, ties decrease by label
        std::size_t ci = 0;
        for (int pos = 1; pos < d; ++pos) {
            if (ci + 1 < p.cuts.size() && pos == p.cuts[ci + 1]) {
                ++ci;
                continue;
            }
            bool strict = p.path_lengths[pos - 1] > p.path_lengths[pos];
            bool tie = p.path_lengths[pos - 1] == p.path_lengths[pos] &&
                       perm[pos - 1] > perm[pos];
            CHECK((strict || tie));
        }
    }
}

TEST_CASE("w polynomial on known graphs") {
    Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(w_polynomial(k3) == IntPolynomial::monomial(3, 6));
    Graph e3 = Graph::from_edges(3, {{1, 2}});
    CHECK(w_polynomial(e3) == IntPolynomial(std::vector<Int>{0, 0, 4, 2}));
    for (int d = 1; d <= 6; ++d)
        CHECK(w_polynomial(Graph::from_edges(d, {})) == eulerian_polynomial(d));
    CHECK_THROWS_AS(w_polynomial(fixture_worked7(), 100), BoundError);
}

TEST_CASE("w polynomial equals the transform of chi, exhaustively small") {
    for (int d = 1; d <= 4; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            WPolynomial w = w_polynomial(g);
            CHECK(w.coeff(0) == 0);
            CHECK(w(1) == factorial(d));
            CHECK(w == w_transform(chromatic_polynomial(g), d + 1));
        });
}

TEST_CASE("canonical permutation of a coloring") {
    Graph e3 = Graph::from_edges(3, {{1, 2}});
    CanonicalPermutation cp = canonical_permutation(e3, Coloring{2, {1, 2, 1}});
    CHECK(cp.profile.perm == std::vector<int>{3, 1, 2});
    CHECK(cp.profile.cuts == std::vector<int>{0, 2});
    CHECK(cp.class_boundaries == std::vector<int>{2});
    CHECK(cp.extra_cuts.empty());

    Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
    CanonicalPermutation rainbow = canonical_permutation(k3, Coloring{3, {1, 2, 3}});
    CHECK(rainbow.profile.perm == std::vector<int>{1, 2, 3});
    CHECK(rainbow.profile.cuts == std::vector<int>{0, 1, 2});
    CHECK(rainbow.extra_cuts.empty());

    Graph e4 = Graph::from_edges(4, {});
    CanonicalPermutation mono = canonical_permutation(e4, Coloring{1, {1, 1, 1, 1}});
    CHECK(mono.profile.perm == std::vector<int>{4, 3, 2, 1});
    CHECK(mono.profile.cuts == std::vector<int>{0});
    CHECK(mono.extra_cuts.empty());

    CHECK_THROWS_AS(canonical_permutation(k3, Coloring{3, {1, 1, 2}}), DomainError);
}

TEST_CASE("coloring -> (permutation, extra cuts) -> coloring round-trip") {
    // rebuild the coloring by splitting the permutation at all class
    // boundaries and handing out the used colors in order
    for (int d = 2; d <= 4; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            for (int n = 1; n <= 3; ++n)
                for_each_proper_coloring(g, n, [&](const std::vector<int>& assignment) {
                    Coloring c{n, assignment};
                    CanonicalPermutation cp = canonical_permutation(g, c);
                    std::vector<int> used;
                    for (int col = 1; col <= n; ++col)
                        if (std::find(assignment.begin(), assignment.end(), col) !=
                            assignment.end())
                            used.push_back(col);
                    // cuts must sit on class boundaries
                    std::vector<int> bounds = cp.class_boundaries;
                    for (int cut : cp.profile.cuts)
                        if (cut != 0)
                            CHECK(std::find(bounds.begin(), bounds.end(), cut) != bounds.end());
                    // splitting at boundaries = cuts plus extra cuts
                    std::vector<int> splits = cp.profile.cuts;
                    splits.insert(splits.end(), cp.extra_cuts.begin(), cp.extra_cuts.end());
                    std::sort(splits.begin(), splits.end());
                    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
                    CHECK(splits.size() == used.size());  // one block per used color
                    std::vector<int> rebuilt(d, 0);
                    for (std::size_t b = 0; b < splits.size(); ++b) {
                        int from = splits[b];
                        int to = b + 1 < splits.size() ? splits[b + 1] : d;
                        for (int pos = from; pos < to; ++pos)
                            rebuilt[cp.profile.perm[pos] - 1] = used[b];
                    }
                    CHECK(rebuilt == assignment);
                });
        });
}

TEST_CASE("binomial-basis chromatic identity") {
    Graph e3 = Graph::from_edges(3, {{1, 2}});
    CHECK(chromatic_identity_check(e3, 2));
    Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(chromatic_identity_check(k3, 3));
    CHECK(chromatic_identity_check(k3, 0));
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_graph(3 + int(rng() % 3), rng);
        for (std::int64_t n = 0; n <= 5; ++n) CHECK(chromatic_identity_check(g, n));
    }
}
