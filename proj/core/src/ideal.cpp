#include "chroma/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "chroma/cuts.hpp"
#include "chroma/error.hpp"

namespace chroma {

void Monomial::validate(int d) const {
    if (chain.size() != exponents.size())
        throw DomainError("monomial chain and exponent lists differ in length");
    for (auto e : exponents)
        if (e < 1) throw DomainError("monomial exponents must be positive");
    for (const VertexSet& s : chain)
        if (!s.subset_of(VertexSet::full(d)))
            throw DomainError("monomial subset exceeds the vertex set");
    if (!is_strict_chain(chain))
        throw DomainError("monomial support is not a strictly nested chain");
}

Monomial parse_monomial(std::string_view text, int d) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty monomial expression");
    if (s == "1") return Monomial::unit();

    std::vector<std::pair<VertexSet, std::int64_t>> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'x' || pos + 1 >= s.size() || s[pos + 1] != '{')
            throw ParseError("expected factor of the form x{...} at position " +
                             std::to_string(pos));
        pos += 2;
        VertexSet set;
        if (pos < s.size() && s[pos] == '*') {
            set = VertexSet::full(d);
            ++pos;
        } else {
            while (pos < s.size() && s[pos] != '}') {
                std::size_t end = pos;
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                if (end == pos) throw ParseError("expected vertex number in monomial subset");
                int v = std::stoi(s.substr(pos, end - pos));
                if (v < 1 || v > d)
                    throw ParseError("vertex " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(d));
                set.insert(v);
                pos = end;
                if (pos < s.size() && s[pos] == ',') ++pos;
            }
        }
        if (pos >= s.size() || s[pos] != '}') throw ParseError("unterminated monomial subset");
        ++pos;
        std::int64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t end = pos;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            if (end == pos) throw ParseError("expected exponent after '^'");
            e = std::stoll(s.substr(pos, end - pos));
            pos = end;
        }
        factors.emplace_back(set, e);
        if (pos < s.size()) {
            if (s[pos] != '*') throw ParseError("expected '*' between monomial factors");
            ++pos;
            if (pos == s.size()) throw ParseError("dangling '*' in monomial");
        }
    }
    // merge repeated indeterminates, then order by inclusion
    std::map<VertexSet, std::int64_t> merged;
    for (auto [set, e] : factors) merged[set] += e;
    Monomial m;
    for (auto& [set, e] : merged) {
        m.chain.push_back(set);
        m.exponents.push_back(e);
    }
    std::vector<std::size_t> idx(m.chain.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return m.chain[a].size() < m.chain[b].size();
    });
    Monomial out;
    for (std::size_t i : idx) {
        out.chain.push_back(m.chain[i]);
        out.exponents.push_back(m.exponents[i]);
    }
    try {
        out.validate(d);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return out;
}

std::string format_monomial(const Monomial& m, int d) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.chain.size(); ++i) {
        if (i) out += " * ";
        out += "x";
        out += m.chain[i] == VertexSet::full(d) ? "{*}" : m.chain[i].to_string();
        if (m.exponents[i] != 1) out += "^" + std::to_string(m.exponents[i]);
    }
    return out;
}

std::vector<Monomial> basic_coloring_monomials(const Graph& g, std::int64_t max_perms) {
    const int d = g.vertex_count();
    Int nperms = factorial(d);
    if (nperms > max_perms)
        throw BoundError("permutation enumeration guard exceeded: d! = " + nperms.str() +
                         " > " + std::to_string(max_perms));
    std::set<Chain> supports;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        CutProfile p = cut_profile(g, perm);
        Chain cumulative;
        VertexSet acc;
        auto shorts = p.short_blocks();
        for (const VertexSet& b : shorts) {
            acc = acc | b;
            cumulative.push_back(acc);
        }
        supports.insert(std::move(cumulative));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Monomial> out;
    out.reserve(supports.size());
    for (const Chain& ch : supports) out.push_back(Monomial::squarefree(ch));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// support(a) subset of support(b), both chains ascending by inclusion
bool support_subset(const Chain& a, const Chain& b) {
    std::size_t j = 0;
    for (const VertexSet& s : a) {
        while (j < b.size() && b[j] != s) ++j;
        if (j == b.size()) return false;
        ++j;
    }
    return true;
}

}  // namespace

std::vector<Monomial> minimal_generators(const Graph& g, std::int64_t max_perms) {
    std::vector<Monomial> basics = basic_coloring_monomials(g, max_perms);
    std::vector<Monomial> out;
    for (const Monomial& m : basics) {
        bool minimal = true;
        for (const Monomial& other : basics) {
            if (other.chain == m.chain) continue;
            if (support_subset(other.chain, m.chain)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

bool contains_monomial_by_stable_blocks(const Graph& g, const Monomial& m) {
    m.validate(g.vertex_count());
    VertexSet prev;
    for (const VertexSet& s : m.chain) {
        if (!is_stable(g, s - prev)) return false;
        prev = s;
    }
    return is_stable(g, prev.complement(g.vertex_count()));
}

bool contains_monomial_by_divisibility(const Graph& g, const Monomial& m,
                                       const std::vector<Monomial>& basics) {
    m.validate(g.vertex_count());
    for (const Monomial& b : basics)
        if (support_subset(b.chain, m.chain)) return true;
    return false;
}

bool contains_monomial(const Graph& g, const Monomial& m) {
    return contains_monomial_by_stable_blocks(g, m);
}

Coloring decode_monomial(const Graph& g, const Monomial& m) {
    const int d = g.vertex_count();
    if (!contains_monomial(g, m))
        throw DomainError("monomial is not in the coloring ideal; decoding would "
                          "produce an improper coloring");
    const std::int64_t n = m.degree();
    Coloring c;
    c.palette = static_cast<int>(n) + 1;
    c.assignment.assign(d, c.palette);  // remainder block gets the top color
    VertexSet prev;
    std::int64_t used = 0;
    for (std::size_t i = 0; i < m.chain.size(); ++i) {
        for (int v : (m.chain[i] - prev).elements())
            c.assignment[v - 1] = static_cast<int>(used) + 1;
        used += m.exponents[i];
        prev = m.chain[i];
    }
    return c;
}

Monomial encode_coloring(const Graph& g, const Coloring& c) {
    if (!c.is_proper(g)) throw DomainError("cannot encode an improper coloring");
    const int d = g.vertex_count();
    std::vector<std::pair<int, VertexSet>> used;  // (color, class), ascending
    for (int col = 1; col <= c.palette; ++col) {
        VertexSet cls;
        for (int v = 1; v <= d; ++v)
            if (c.color(v) == col) cls.insert(v);
        if (!cls.empty()) used.emplace_back(col, cls);
    }
    Monomial m;
    auto push = [&m](VertexSet s, std::int64_t e) {
        if (e > 0) {
            m.chain.push_back(s);
            m.exponents.push_back(e);
        }
    };
    push(VertexSet(), used.front().first - 1);
    VertexSet cumulative;
    for (std::size_t i = 0; i + 1 < used.size(); ++i) {
        cumulative = cumulative | used[i].second;
        push(cumulative, used[i + 1].first - used[i].first);
    }
    push(VertexSet::full(d), c.palette - used.back().first);
    m.validate(d);
    return m;
}

Int count_degree_monomials(const Graph& g, std::int64_t n, int max_d,
                           std::int64_t max_degree) {
    const int d = g.vertex_count();
    if (d > max_d)
        throw BoundError("chain enumeration guard: d = " + std::to_string(d) + " > " +
                         std::to_string(max_d));
    if (n > max_degree)
        throw BoundError("chain enumeration guard: degree " + std::to_string(n) + " > " +
                         std::to_string(max_degree));
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (n == 0) return contains_monomial(g, Monomial::unit()) ? 1 : 0;

    const std::uint32_t all = VertexSet::full(d).mask();
    Int total = 0;
    // Chains S_1 < ... < S_k with stable difference blocks; a chain of
    // length k carries C(n-1, k-1) exponent vectors of total degree n.
    // Extending past an unstable block can never reach an ideal member, so
    // those branches are pruned whole.
    auto rec = [&](auto&& self, std::uint32_t last, std::int64_t k) -> void {
        if (is_stable(g, VertexSet::from_mask(all & ~last))) total += binomial(n - 1, k - 1);
        if (k == n) return;
        std::uint32_t rest = all & ~last;
        // strict supersets of last: last | x for nonempty submasks x of rest
        for (std::uint32_t x = rest; x; x = (x - 1) & rest) {
            if (!is_stable(g, VertexSet::from_mask(x))) continue;
            self(self, last | x, k + 1);
        }
    };
    // chains whose first member is the empty set (block vacuously stable)
    rec(rec, 0u, 1);
    // chains starting at a nonempty set
    for (std::uint32_t s = 1; s <= all; ++s)
        if (is_stable(g, VertexSet::from_mask(s))) rec(rec, s, 1);
    return total;
}

GenStats generator_stats(const Graph& g, std::int64_t max_perms) {
    GenStats stats;
    std::map<VertexSet, Int> mult;
    for (const Monomial& m : minimal_generators(g, max_perms)) {
        ++stats.degree_histogram[m.degree()];
        for (const VertexSet& s : m.chain) ++mult[s];
    }
    for (auto& [s, n] : mult) stats.indeterminate_multiplicities.push_back(n);
    std::sort(stats.indeterminate_multiplicities.begin(),
              stats.indeterminate_multiplicities.end());
    return stats;
}

std::string format_gen_stats(const GenStats& s) {
    Int total = 0;
    for (auto& [deg, n] : s.degree_histogram) total += n;
    std::string out = "generators " + total.str() + "\n";
    out += "degree_histogram";
    for (auto& [deg, n] : s.degree_histogram)
        out += " " + std::to_string(deg) + ":" + n.str();
    out += "\nindeterminate_multiplicities";
    for (const Int& m : s.indeterminate_multiplicities) out += " " + m.str();
    out += "\n";
    return out;
}

}  // namespace chroma
