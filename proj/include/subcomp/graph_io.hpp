#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "subcomp/graph.hpp"

namespace subcomp {

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// newline are accepted. Throws ParseError on malformed input, including
/// nonzero padding bits.
auto decode_graph6(std::string_view text) -> Graph;

/// Canonical graph6 encoding (no header, no newline).
auto encode_graph6(const Graph& g) -> std::string;

/// Edge-list text: "n m" followed by m lines "u v", 0-indexed. '#' starts a
/// comment that runs to end of line. Throws ParseError.
auto parse_edge_list(std::string_view text) -> Graph;

/// Writes "n m" then one sorted "u v" line per edge.
auto format_edge_list(const Graph& g) -> std::string;

/// 64-bit FNV-1a of the canonical graph6 encoding, as 16 hex digits.
auto graph_digest(const Graph& g) -> std::string;

}  // namespace subcomp
