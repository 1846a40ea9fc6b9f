#include "chroma/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "chroma/error.hpp"

namespace chroma {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int d = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        auto first = sv.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || sv[first] == '#') continue;
        std::istringstream ls(line);
        if (d < 0) {
            if (!(ls >> d) || d < 1) parse_fail(lineno, "expected positive vertex count");
            std::string rest;
            if (ls >> rest) parse_fail(lineno, "trailing tokens after vertex count");
            continue;
        }
        int i = 0, j = 0;
        if (!(ls >> i >> j)) parse_fail(lineno, "expected edge \"i j\"");
        std::string rest;
        if (ls >> rest) parse_fail(lineno, "trailing tokens after edge");
        if (i < 1 || i > d || j < 1 || j > d)
            parse_fail(lineno, "vertex out of range 1.." + std::to_string(d));
        if (i == j) parse_fail(lineno, "loop edge at vertex " + std::to_string(i));
        edges.emplace_back(i, j);
    }
    if (d < 0) throw ParseError("empty input: expected vertex count");
    return Graph::from_edges(d, std::move(edges));
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [i, j] : g.edges())
        out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");

    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character (code " +
                             std::to_string(static_cast<int>(c)) + ")");

    std::size_t pos = 0;
    long long n;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126) {
            if (text.size() < 8) throw ParseError("truncated graph6 vertex count");
            n = 0;
            for (int k = 2; k < 8; ++k) n = (n << 6) | (text[k] - 63);
            pos = 8;
        } else {
            if (text.size() < 4) throw ParseError("truncated graph6 vertex count");
            n = 0;
            for (int k = 1; k < 4; ++k) n = (n << 6) | (text[k] - 63);
            pos = 4;
        }
    }
    if (n < 1) throw ParseError("graph6 vertex count must be positive");
    if (n > 31) throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds 31");

    const int d = static_cast<int>(n);
    const long long nbits = static_cast<long long>(d) * (d - 1) / 2;
    const std::size_t expect = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos != expect)
        throw ParseError("graph6 length mismatch: " + std::to_string(d) + " vertices need " +
                         std::to_string(expect) + " data characters, got " +
                         std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 2; j <= d; ++j)
        for (int i = 1; i < j; ++i, ++bit) {
            int chunk = text[pos + bit / 6] - 63;
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    // padding bits must be zero
    for (long long b = nbits; b < static_cast<long long>(expect) * 6; ++b) {
        int chunk = text[pos + b / 6] - 63;
        if ((chunk >> (5 - b % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
    }
    return Graph::from_edges(d, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const int d = g.vertex_count();
    std::string out;
    if (d <= 62) {
        out += static_cast<char>(d + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((d >> 12) & 63) + 63);
        out += static_cast<char>(((d >> 6) & 63) + 63);
        out += static_cast<char>((d & 63) + 63);
    }
    long long nbits = static_cast<long long>(d) * (d - 1) / 2;
    std::vector<int> chunks((nbits + 5) / 6, 0);
    long long bit = 0;
    for (int j = 2; j <= d; ++j)
        for (int i = 1; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) chunks[bit / 6] |= 1 << (5 - bit % 6);
    for (int c : chunks) out += static_cast<char>(c + 63);
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        std::string line;
        if (!std::getline(in, line)) throw ParseError("empty graph6 file: " + path);
        return parse_graph6(line);
    }
    return parse_edge_list(in);
}

}  // namespace chroma
