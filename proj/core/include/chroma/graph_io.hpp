#ifndef CHROMA_GRAPH_IO_HPP
#define CHROMA_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "chroma/graph.hpp"

namespace chroma {

// Edge-list text format: first non-comment line is d, then one "i j" pair
// per line.  Lines starting with '#' and blank lines are ignored.
// Parse errors carry the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(std::string_view text);
std::string format_edge_list(const Graph& g);

// Standard graph6 encoding: N(n) header byte(s), then the upper triangle of
// the adjacency matrix in column order, packed into 6-bit chunks offset by
// 63.  An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Reads a graph from a file; names ending in ".g6" are parsed as graph6,
// everything else as an edge list.
Graph load_graph_file(const std::string& path);

}  // namespace chroma

#endif
