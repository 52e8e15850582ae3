#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// graph6 text encoding: one printable-ASCII token per graph, 6 adjacency
/// bits per byte with bias 63. Order up to 62 uses the one-byte size header,
/// 63..258047 the '~' + 3 byte header. Decoding accepts an optional
/// ">>graph6<<" prefix and rejects sparse6/digraph6 input.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// One graph per non-empty line; lines starting with '#' are skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace turan
