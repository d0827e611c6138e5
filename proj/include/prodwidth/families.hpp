#pragma once

#include <memory>
#include <vector>

#include "prodwidth/graph.hpp"

namespace prodwidth {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{parts...} with an extra clique part of size `overlay`
/// joined completely to everything else. Part sizes may be zero.
Graph complete_multipartite(const std::vector<int>& parts, int overlay = 0);
Graph star_graph(int leaves);
/// Spider with k legs of length two: root r, middles u_i, tips v_i.
/// Vertex ids: 0 = r, 1..k = u_i, k+1..2k = v_i.
Graph daddy_longlegs(int k);
Graph grid_graph(int rows, int cols);
/// Vertices 0..n-1, i ~ i+o (mod n) for each offset o.
Graph circulant_graph(int n, const std::vector<int>& offsets);
/// Canonical d-regular graph: circulant with offsets 1..d/2 plus the
/// antipodal chord when d is odd (order is forced even then). Picks the
/// smallest valid order >= max(min_order, d+1) automatically.
Graph regular_circulant(int d, int min_order = 0);
/// Path on n-k vertices sharing its endpoint v0 with a K_{k+1}.
/// Ids: 0..n-k-1 the path (v0 = 0), n-k.. the other clique vertices.
Graph gkn_graph(int k, int n);

/// Same vertices, edge iff distance at most 2.
Graph square(const Graph& g);

struct FamilySpec {
  enum class Kind {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    Star,
    DaddyLonglegs,
    Grid,
    Circulant,
    DisjointUnion,
    Gkn,
  };
  Kind kind = Kind::Path;
  std::vector<int> params;          // sizes; Grid uses (r,c), Gkn uses (k,n)
  std::vector<int> offsets;         // Circulant only
  std::vector<FamilySpec> members;  // DisjointUnion only
};

Graph generate(const FamilySpec& spec);

}  // namespace prodwidth
