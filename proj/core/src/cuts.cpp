#include "chroma/cuts.hpp"

#include <algorithm>
#include <numeric>

#include "chroma/error.hpp"
#include "chroma/poly_lab.hpp"

namespace chroma {

namespace {

void check_permutation(int d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d)
        throw DomainError("permutation must have length d = " + std::to_string(d));
    std::vector<bool> seen(d + 1, false);
    for (int v : perm) {
        if (v < 1 || v > d || seen[v])
            throw DomainError("not a permutation of 1.." + std::to_string(d));
        seen[v] = true;
    }
}

// path_lengths via the O(d^2) recurrence l(k) = 1 + max l(j) over earlier
// positions j whose letter is adjacent to a_k (0 if none).
void compute_path_lengths(const Graph& g, const std::vector<int>& perm,
                          std::vector<int>& ell) {
    const int d = static_cast<int>(perm.size());
    ell.assign(d, 0);
    for (int k = 0; k < d; ++k) {
        VertexSet nb = g.neighbors(perm[k]);
        int best = -1;
        for (int j = 0; j < k; ++j)
            if (nb.contains(perm[j]) && ell[j] > best) best = ell[j];
        ell[k] = best + 1;
    }
}

std::vector<int> cut_positions(const std::vector<int>& perm, const std::vector<int>& ell) {
    const int d = static_cast<int>(perm.size());
    std::vector<int> cuts{0};
    for (int p = 1; p < d; ++p)
        if (ell[p - 1] < ell[p] || (ell[p - 1] == ell[p] && perm[p - 1] < perm[p]))
            cuts.push_back(p);
    return cuts;
}

}  // namespace

CutProfile cut_profile(const Graph& g, const std::vector<int>& perm) {
    check_permutation(g.vertex_count(), perm);
    CutProfile out;
    out.perm = perm;
    compute_path_lengths(g, perm, out.path_lengths);
    out.cuts = cut_positions(perm, out.path_lengths);
    const int d = g.vertex_count();
    for (std::size_t j = 0; j < out.cuts.size(); ++j) {
        int from = out.cuts[j];
        int to = j + 1 < out.cuts.size() ? out.cuts[j + 1] : d;
        VertexSet block;
        for (int p = from; p < to; ++p) block.insert(perm[p]);
        out.blocks.push_back(block);
    }
    return out;
}

std::string format_cut_profile(const CutProfile& p) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(v[i]);
        }
        return s;
    };
    std::string out = "perm " + join(p.perm) + "\n";
    out += "ell " + join(p.path_lengths) + "\n";
    out += "cuts " + join(p.cuts) + "\n";
    out += "blocks";
    for (const auto& b : p.blocks) out += " " + b.to_string();
    out += "\n";
    return out;
}

WPolynomial w_polynomial(const Graph& g, std::int64_t max_perms) {
    const int d = g.vertex_count();
    Int nperms = factorial(d);
    if (nperms > max_perms)
        throw BoundError("permutation enumeration guard exceeded: d! = " + nperms.str() +
                         " > " + std::to_string(max_perms));
    std::vector<std::uint32_t> adj(d + 1);
    for (int v = 1; v <= d; ++v) adj[v] = g.neighbors(v).mask();

    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> ell(d);
    std::vector<Int> w(d + 1);
    do {
        for (int k = 0; k < d; ++k) {
            std::uint32_t nb = adj[perm[k]];
            int best = -1;
            for (int j = 0; j < k; ++j)
                if (((nb >> (perm[j] - 1)) & 1u) && ell[j] > best) best = ell[j];
            ell[k] = best + 1;
        }
        int cuts = 1;
        for (int p = 1; p < d; ++p)
            if (ell[p - 1] < ell[p] || (ell[p - 1] == ell[p] && perm[p - 1] < perm[p]))
                ++cuts;
        ++w[cuts];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return WPolynomial(std::move(w));
}

CanonicalPermutation canonical_permutation(const Graph& g, const Coloring& c) {
    if (!c.is_proper(g)) throw DomainError("coloring is not a proper coloring of the graph");
    const int d = g.vertex_count();

    std::vector<int> perm;
    perm.reserve(d);
    std::vector<int> ell_of(d + 1, -1);  // path length of already placed vertices
    std::vector<int> boundaries;

    for (const VertexSet& cls : c.classes()) {
        if (cls.empty()) continue;
        if (!perm.empty()) boundaries.push_back(static_cast<int>(perm.size()));
        // Path lengths within a class depend only on the preceding classes:
        // the class is stable, so same-class letters never extend a path.
        std::vector<std::pair<int, int>> order;  // (path length, vertex)
        for (int v : cls.elements()) {
            VertexSet nb = g.neighbors(v);
            int best = -1;
            for (int u : perm)
                if (nb.contains(u) && ell_of[u] > best) best = ell_of[u];
            order.emplace_back(best + 1, v);
        }
        std::sort(order.begin(), order.end(), std::greater<>());
        for (auto [lv, v] : order) {
            perm.push_back(v);
            ell_of[v] = lv;
        }
    }

    CanonicalPermutation out;
    out.profile = cut_profile(g, perm);
    out.class_boundaries = std::move(boundaries);
    for (int cut : out.profile.cuts)
        if (cut != 0 &&
            !std::binary_search(out.class_boundaries.begin(), out.class_boundaries.end(), cut))
            throw DomainError("internal: cut not on a class boundary");
    for (int b : out.class_boundaries)
        if (!std::binary_search(out.profile.cuts.begin(), out.profile.cuts.end(), b))
            out.extra_cuts.push_back(b);
    return out;
}

bool chromatic_identity_check(const Graph& g, std::int64_t n, std::string* detail,
                              std::int64_t max_perms) {
    const int d = g.vertex_count();
    WPolynomial w = w_polynomial(g, max_perms);
    Int lhs = chromatic_from_w(w, d, n);
    Int rhs = chromatic_polynomial(g)(Int(n));
    if (lhs == rhs) return true;
    if (detail)
        *detail = "cut-statistic sum " + lhs.str() + " != chromatic value " + rhs.str() +
                  " at n = " + std::to_string(n);
    return false;
}

}  // namespace chroma
