#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Decodes one graph6 string (no trailing newline). Rejects malformed
/// lengths, bytes outside '?'..'~', nonzero padding bits and n > 16.
Graph parse_graph6(std::string_view text);

/// Encodes as graph6: N(n) byte, then the column-major upper triangle in
/// 6-bit chunks offset by 63.
std::string write_graph6(const Graph& g);

/// Reads one graph per line; blank lines and a leading ">>graph6<<" header
/// are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace turan
