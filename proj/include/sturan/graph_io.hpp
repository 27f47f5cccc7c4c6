#pragma once

#include "sturan/graph.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace sturan {

/// Decodes a graph6 string. An optional ">>graph6<<" prefix and trailing
/// newline are accepted. Throws FormatError on a malformed header, a
/// truncated body, trailing data or a character outside '?'..'~'.
Graph from_graph6(std::string_view text);

/// Encodes in graph6: size header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups,
/// zero padded, each group offset by 63.
std::string to_graph6(const Graph& g);

/// Reads a plain-text edge list: one "u v" pair (0-indexed) per line.
/// Blank lines and '#' comments are skipped; a line "n N" fixes the order,
/// otherwise the order is one more than the largest index seen.
Graph read_edge_list(std::istream& in);

} // namespace sturan
