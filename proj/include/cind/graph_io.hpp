#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cind/graph.hpp"

namespace cind {

// Parse failure; `position` is a 0-based byte offset (graph6) or 1-based
// line number (edge list), echoed in the message.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg), position(position) {}
    size_t position;
};

// graph6 (McKay). Handles the 18-bit extended order form for n >= 63 and the
// optional ">>graph6<<" header. A single trailing newline is tolerated;
// anything else after the matrix bytes is an error.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge list: first line "n m", then one "u v" per line.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

// Reads a graph file, picking the format from the extension
// (.g6 -> graph6, .el -> edge list, otherwise sniffed from content).
Graph load_graph_file(const std::string& path);

} // namespace cind
