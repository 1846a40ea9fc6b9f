#include <algorithm>
#include <set>

#include "doctest.h"

#include "chroma/error.hpp"
#include "chroma/ideal.hpp"
#include "chroma/verify.hpp"

using namespace chroma;

namespace {

VertexSet vs(std::initializer_list<int> elems) {
    VertexSet s;
    for (int v : elems) s.insert(v);
    return s;
}

Monomial sq(std::initializer_list<std::initializer_list<int>> chain) {
    Chain ch;
    for (auto c : chain) ch.push_back(vs(c));
    return Monomial::squarefree(ch);
}

const Graph e3 = Graph::from_edges(3, {{1, 2}});
const Graph k3 = Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}});

}  // namespace

TEST_CASE("monomial text syntax round-trips") {
    Monomial m = parse_monomial("x{2,5}^3 * x{}^2 * x{2,3,5}", 7);
    CHECK(m.chain == Chain{vs({}), vs({2, 5}), vs({2, 3, 5})});
    CHECK(m.exponents == std::vector<std::int64_t>{2, 3, 1});
    CHECK(m.degree() == 6);
    CHECK(format_monomial(m, 7) == "x{}^2 * x{2,5}^3 * x{2,3,5}");
    CHECK(parse_monomial(format_monomial(m, 7), 7) == m);

    CHECK(parse_monomial("1", 4) == Monomial::unit());
    CHECK(format_monomial(Monomial::unit(), 4) == "1");
    CHECK(parse_monomial(" x { 1 } ^ 2 ", 3) ==
          Monomial{Chain{vs({1})}, std::vector<std::int64_t>{2}});
    // the full set prints as {*}
    Monomial full = parse_monomial("x{*}", 3);
    CHECK(full.chain == Chain{vs({1, 2, 3})});
    CHECK(format_monomial(full, 3) == "x{*}");
    CHECK(format_monomial(parse_monomial("x{1,2,3}", 3), 3) == "x{*}");
    // repeated indeterminates merge
    CHECK(parse_monomial("x{1}*x{1}", 3) ==
          Monomial{Chain{vs({1})}, std::vector<std::int64_t>{2}});

    CHECK_THROWS_AS(parse_monomial("x{1,4}", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x{1} * x{2}", 3), ParseError);  // not a chain
    CHECK_THROWS_AS(parse_monomial("x{1}^0", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x{1} *", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("y{1}", 3), ParseError);
}

TEST_CASE("basic coloring monomials") {
    // brute force over S_3 for the one-edge graph
    std::vector<Monomial> basics = basic_coloring_monomials(e3);
    std::set<Monomial> expect{sq({{1}}),      sq({{1}, {1, 3}}), sq({{2}}),
                              sq({{2}, {2, 3}}), sq({{1, 3}}),   sq({{2, 3}})};
    CHECK(std::set<Monomial>(basics.begin(), basics.end()) == expect);

    // the worked permutation contributes the cumulative unions of its
    // short block sequence
    std::vector<Monomial> w7 = basic_coloring_monomials(fixture_worked7());
    Monomial target = sq({{2, 5}, {2, 3, 5, 6}, {1, 2, 3, 4, 5, 6}});
    CHECK(std::find(w7.begin(), w7.end(), target) != w7.end());
    for (const Monomial& m : w7) {
        CHECK(m.is_squarefree());
        if (!m.is_unit()) CHECK(m.chain.back() != VertexSet::full(7));
    }

    // edgeless graph: the unit monomial appears (ideal = whole ring)
    std::vector<Monomial> unit_case = basic_coloring_monomials(Graph::from_edges(4, {}));
    CHECK(std::find(unit_case.begin(), unit_case.end(), Monomial::unit()) != unit_case.end());
}

TEST_CASE("minimal generators") {
    std::vector<Monomial> gens = minimal_generators(e3);
    std::set<Monomial> expect{sq({{1}}), sq({{2}}), sq({{1, 3}}), sq({{2, 3}})};
    CHECK(std::set<Monomial>(gens.begin(), gens.end()) == expect);

    // complete graph: six generators, all of degree 2
    std::vector<Monomial> k3gens = minimal_generators(k3);
    CHECK(k3gens.size() == 6);
    for (const Monomial& m : k3gens) CHECK(m.degree() == 2);

    std::vector<Monomial> edgeless = minimal_generators(Graph::from_edges(3, {}));
    CHECK(edgeless == std::vector<Monomial>{Monomial::unit()});
}

TEST_CASE("ideal membership") {
    CHECK(contains_monomial(e3, sq({{1, 3}})));
    CHECK_FALSE(contains_monomial(e3, sq({{}})));      // remainder holds the edge
    CHECK_FALSE(contains_monomial(e3, sq({{1, 2}})));  // block holds the edge
    // no member is divisible by the full-set indeterminate alone
    Monomial full_power{Chain{vs({1, 2, 3})}, {4}};
    CHECK_FALSE(contains_monomial(e3, full_power));
    CHECK_FALSE(contains_monomial(k3, sq({{1, 2, 3}})));
    // unit membership <-> edgeless
    CHECK(contains_monomial(Graph::from_edges(2, {}), Monomial::unit()));
    CHECK_FALSE(contains_monomial(e3, Monomial::unit()));

    CHECK_THROWS_AS(contains_monomial(e3, sq({{1}, {2}})), DomainError);

    // both membership routes agree on every squarefree chain, d <= 4
    for (int d = 2; d <= 4; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            std::vector<Monomial> basics = basic_coloring_monomials(g);
            const std::uint32_t full = VertexSet::full(d).mask();
            for (std::uint32_t a = 0; a <= full; ++a)
                for (std::uint32_t b = 0; b <= full; ++b) {
                    if (a != b && (a & ~b) == 0) {
                        Monomial m = sq({});
                        m.chain = {VertexSet::from_mask(a), VertexSet::from_mask(b)};
                        m.exponents = {1, 1};
                        CHECK(contains_monomial_by_stable_blocks(g, m) ==
                              contains_monomial_by_divisibility(g, m, basics));
                    }
                }
        });
}

TEST_CASE("decoding monomials to colorings") {
    Graph host = fixture_codec7();
    Monomial m = parse_monomial("x{}^2 * x{2,5}^3 * x{2,3,5}^2", 7);
    Coloring c = decode_monomial(host, m);
    CHECK(c.palette == 8);
    CHECK(c.assignment == std::vector<int>{8, 3, 6, 8, 3, 8, 8});

    Coloring simple = decode_monomial(e3, sq({{1, 3}}));
    CHECK(simple.palette == 2);
    CHECK(simple.assignment == std::vector<int>{1, 2, 1});

    Coloring unit = decode_monomial(Graph::from_edges(3, {}), Monomial::unit());
    CHECK(unit.palette == 1);
    CHECK(unit.assignment == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(decode_monomial(e3, sq({{1, 2}})), DomainError);
}

TEST_CASE("encoding colorings to monomials") {
    Graph host = fixture_codec7();
    Coloring nine{9, {7, 7, 4, 7, 7, 4, 6}};
    CHECK(format_monomial(encode_coloring(host, nine), 7) ==
          "x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2");

    CHECK(encode_coloring(e3, Coloring{2, {1, 2, 1}}) == sq({{1, 3}}));

    Graph e1 = Graph::from_edges(1, {});
    CHECK(encode_coloring(e1, Coloring{1, {1}}) == Monomial::unit());

    CHECK_THROWS_AS(encode_coloring(e3, Coloring{2, {1, 1, 2}}), DomainError);
}

TEST_CASE("codec round-trips exhaustively at small scale") {
    for (int d = 1; d <= 4; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            for (int n = 1; n <= 4; ++n)
                for_each_proper_coloring(g, n, [&](const std::vector<int>& a) {
                    Coloring c{n, a};
                    Monomial m = encode_coloring(g, c);
                    CHECK(m.degree() == n - 1);
                    CHECK(contains_monomial(g, m));
                    Coloring back = decode_monomial(g, m);
                    CHECK(back.palette == c.palette);
                    CHECK(back.assignment == c.assignment);
                });
        });
}

TEST_CASE("encode inverts decode on ideal members") {
    // enumerate every member monomial of degree <= 3 for all graphs d <= 4:
    // chains over all subsets (empty and full allowed) with exponent
    // compositions, kept when the stable-block criterion admits them
    for (int d = 2; d <= 4; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            const std::uint32_t full = VertexSet::full(d).mask();
            std::vector<Chain> chains;
            Chain cur;
            auto rec = [&](auto&& self, std::uint32_t last) -> void {
                if (!cur.empty()) chains.push_back(cur);
                if (cur.size() == 3) return;
                std::uint32_t rest = full & ~last;
                for (std::uint32_t x = rest; x; x = (x - 1) & rest) {
                    cur.push_back(VertexSet::from_mask(last | x));
                    self(self, last | x);
                    cur.pop_back();
                }
            };
            cur.push_back(VertexSet());
            rec(rec, 0u);
            cur.pop_back();
            rec(rec, 0u);
            if (contains_monomial(g, Monomial::unit())) {
                Monomial u = Monomial::unit();
                CHECK(encode_coloring(g, decode_monomial(g, u)) == u);
            }
            for (const Chain& chain : chains) {
                // distribute total degree <= 3 over the chain
                std::vector<std::vector<std::int64_t>> expos;
                const std::size_t k = chain.size();
                if (k == 1)
                    expos = {{1}, {2}, {3}};
                else if (k == 2)
                    expos = {{1, 1}, {1, 2}, {2, 1}};
                else
                    expos = {{1, 1, 1}};
                for (auto& e : expos) {
                    Monomial m{chain, e};
                    if (!contains_monomial(g, m)) continue;
                    CHECK(encode_coloring(g, decode_monomial(g, m)) == m);
                }
            }
        });
}

TEST_CASE("multiplying members by the extreme indeterminates") {
    // x_full and x_empty multiples stay in the ideal; the full-set multiple
    // decodes to the same assignment with a wider palette
    Monomial m = sq({{1, 3}});
    REQUIRE(contains_monomial(e3, m));
    Monomial with_full = m;
    with_full.chain.push_back(VertexSet::full(3));
    with_full.exponents.push_back(2);
    CHECK(contains_monomial(e3, with_full));
    Coloring base = decode_monomial(e3, m);
    Coloring wide = decode_monomial(e3, with_full);
    CHECK(wide.assignment == base.assignment);
    CHECK(wide.palette == base.palette + 2);

    Monomial with_empty = m;
    with_empty.chain.insert(with_empty.chain.begin(), VertexSet());
    with_empty.exponents.insert(with_empty.exponents.begin(), 1);
    CHECK(contains_monomial(e3, with_empty));
}

TEST_CASE("degree-wise counts match the shifted chromatic polynomial") {
    CHECK(count_degree_monomials(e3, 1) == 4);
    CHECK(count_degree_monomials(k3, 2) == 6);
    CHECK(count_degree_monomials(k3, 0) == 0);
    CHECK(count_degree_monomials(Graph::from_edges(2, {}), 0) == 1);
    CHECK_THROWS_AS(count_degree_monomials(fixture_worked7(), 3, 5), BoundError);

    for (int d = 1; d <= 4; ++d)
        for_all_graphs(d, [&](const Graph& g) {
            IntPolynomial chi = chromatic_polynomial(g);
            for (std::int64_t n = 0; n <= 4; ++n)
                CHECK(count_degree_monomials(g, n) == chi(n + 1));
        });
}

TEST_CASE("generator statistics") {
    GenStats s = generator_stats(e3);
    CHECK(s.degree_histogram == std::map<std::int64_t, Int>{{1, 4}});
    CHECK(s.indeterminate_multiplicities == std::vector<Int>{1, 1, 1, 1});

    GenStats edgeless = generator_stats(Graph::from_edges(3, {}));
    CHECK(edgeless.degree_histogram == std::map<std::int64_t, Int>{{0, 1}});
    CHECK(edgeless.indeterminate_multiplicities.empty());

    CHECK(generator_stats(fixture_triangles5()) != generator_stats(fixture_chorded5()));
    CHECK(format_gen_stats(s) ==
          "generators 4\ndegree_histogram 1:4\nindeterminate_multiplicities 1 1 1 1\n");
}
