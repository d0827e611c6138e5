#pragma once

#include <string>

#include "prodwidth/graph.hpp"

namespace prodwidth {

/// graph6 per the McKay byte encoding: order as N(n) (offset-63 bytes,
/// 126-prefixed 3-byte form above 62), then the upper triangle bits
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

/// ASCII edge lists: one "u v" pair per line, 0-indexed, '#' comments and
/// blank lines allowed. The decoder reports the offending line on error.
std::string edgelist_encode(const Graph& g);
Graph edgelist_decode(const std::string& text);

enum class GraphFormat { Graph6, EdgeList };

Graph decode(const std::string& data, GraphFormat fmt);
std::string encode(const Graph& g, GraphFormat fmt);

/// Reads a graph file, picking the format from the extension
/// (.g6 -> graph6, anything else -> edge list) unless overridden.
Graph read_graph_file(const std::string& path);
Graph read_graph_file(const std::string& path, GraphFormat fmt);

}  // namespace prodwidth
