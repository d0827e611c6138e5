#pragma once

#include <cstdint>
#include <vector>

#include "prodwidth/graph.hpp"

namespace prodwidth {

/// Canonical adjacency code: minimum upper-triangle bit string over all
/// vertex orderings compatible with an iterated degree-refinement
/// partition. Equal codes == isomorphic. Brute force, n <= 11.
uint64_t canonical_code(const Graph& g);

Graph graph_from_code(int n, uint64_t code);

/// Brute-force permutation search (refinement-pruned), desk scale.
bool is_isomorphic(const Graph& a, const Graph& b);

/// All isomorphism classes on exactly n vertices, one canonical
/// representative each, sorted by code. Built by vertex augmentation and
/// cached for the process lifetime. n <= 8.
const std::vector<Graph>& all_graphs(int n);

std::vector<Graph> all_graphs_upto(int n);
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> connected_graphs_upto(int n);

}  // namespace prodwidth
