#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodwidth/bitset.hpp"

namespace prodwidth {

/// Simple undirected graph with dense vertex ids 0..n-1 and bitset
/// neighbour rows. Values are treated as immutable once built; every
/// operation in the library takes `const Graph&` and returns fresh values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  /// Rejects loops and out-of-range ids; adding an existing edge is a no-op.
  void add_edge(int u, int v);

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;
  int min_degree() const;

  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph on `vertices`; output ids follow the input order.
  Graph induced(const std::vector<int>& vertices) const;
  Graph induced(const VertexSet& vertices) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

Graph disjoint_union(const std::vector<Graph>& parts);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Proper 2-colouring if bipartite (one colour per vertex), otherwise nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// BFS distances from `src`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Max eccentricity over the component of each vertex; requires connected g.
int diameter(const Graph& g);

/// n, m, max/min degree, components, max component order, connectivity,
/// bipartiteness with a 2-colouring when one exists.
struct BasicParams {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  std::vector<std::vector<int>> component_list;
  int max_component_order = 0;  // 0 on the empty graph
  bool connected = false;
  bool bipartite = false;
  std::vector<int> two_coloring;  // empty unless bipartite
};

BasicParams basic_params(const Graph& g);

/// True if the vertex set `path` is a path in g (consecutive edges, no repeats).
bool is_path_in(const Graph& g, const std::vector<int>& path);

/// True if `s` induces a connected non-empty subgraph.
bool is_connected_set(const Graph& g, const VertexSet& s);

}  // namespace prodwidth
