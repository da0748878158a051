#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oddhole/graph.hpp"

namespace oddhole {

enum class GraphFormat { kGraph6, kEdgeList };

/// "graph6" / "edgelist"; throws std::invalid_argument otherwise.
GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat f);

struct GraphDocument {
  Graph graph;
  GraphFormat format = GraphFormat::kEdgeList;
  std::string name;
};

/// Input error with a 1-based line number and a 0-based byte offset into
/// that line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int offset);
  int line() const { return line_; }
  int offset() const { return offset_; }

 private:
  int line_;
  int offset_;
};

/// One graph. graph6 takes a single line (an optional ">>graph6<<" header is
/// accepted). Edge lists are "n m" then m lines "u v"; blank lines and lines
/// starting with '#' are skipped, and a leading "# name" line becomes the name.
GraphDocument parse_graph(std::string_view text, GraphFormat format);

/// Several graphs: one graph6 string per line, or edge-list documents one
/// after another.
std::vector<GraphDocument> parse_graphs(std::string_view text, GraphFormat format);

/// graph6 without header or newline; edge list with sorted edges and a
/// trailing newline.
std::string encode_graph(const Graph& g, GraphFormat format);
std::string encode_graph6(const Graph& g);
std::string encode_edge_list(const Graph& g);

/// Hex FNV-1a digest of the graph6 encoding, prefixed "fnv1a64:".
std::string graph_digest(const Graph& g);

}  // namespace oddhole
