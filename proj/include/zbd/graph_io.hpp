#ifndef ZBD_GRAPH_IO_HPP
#define ZBD_GRAPH_IO_HPP

#include <stdexcept>
#include <string>

#include "zbd/graph.hpp"

namespace zbd {

enum class GraphFormat { Graph6, EdgeList, DimacsGraph };

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "graph6", "edge_list" or "dimacs_graph"; throws std::invalid_argument otherwise.
GraphFormat parse_format_name(const std::string& name);

// edge_list: "n m" header, then one "u v" pair per line, 0-indexed.
// dimacs_graph: "p edge n m" then "e u v" lines, 1-indexed on the wire.
// graph6: header-less McKay format.
// Throws FormatError naming the offending line/byte.
Graph parse_graph(const std::string& input, GraphFormat format);

std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace zbd

#endif
