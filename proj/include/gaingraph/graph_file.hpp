#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gaingraph/gain_graph.hpp"

namespace gaingraph {

// Text format, 0-based vertices; "#" starts a comment:
//
//   # comment
//   vertices 3
//   0 1 i
//   0 2 0.7071067811865476,0.7071067811865476
//   1 2 polar:3.14159
//
// Gain tokens: 1, -1, i, -i, "<re>,<im>", or "polar:<theta>" (radians).

/// Parses a gain token. Throws Syntax or NonUnitGain (line 0).
Gain parse_gain_token(std::string_view token);

/// Throws Syntax, NonUnitGain, DuplicateEdge, BadHeader, BadIndex, SelfLoop;
/// every error carries the offending 1-based line.
GainGraph parse_graph(std::string_view text);
GainGraph parse_graph_file(const std::filesystem::path& path);

/// Writes g in the text format with round-trip precision.
std::string serialize_graph(const GainGraph& g);

}  // namespace gaingraph
