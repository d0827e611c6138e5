#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodwidth/graph.hpp"
#include "prodwidth/products.hpp"

namespace prodwidth {

/// Branch sets indexed by the vertices of the pattern graph H.
struct MinorModel {
  std::vector<std::vector<int>> branch_sets;
};

/// Empty iff: branch sets are disjoint, non-empty and connected, and every
/// H-edge has a connecting G-edge.
std::vector<std::string> validate_model(const Graph& g, const Graph& h, const MinorModel& m);

inline constexpr int kMinorHostAdvisory = 12;
inline constexpr int kMinorPatternAdvisory = 6;

/// Exhaustive branch-set search; absence is a proof within the budget.
/// `vertex_budget` caps v(g); the node budget guards runaway searches.
std::optional<MinorModel> find_minor(const Graph& g, const Graph& h,
                                     int vertex_budget = kMinorHostAdvisory,
                                     long long node_budget = 50'000'000);

struct MinorParams {
  int eta = 0;  // largest t with a K_t minor
  MinorModel eta_model;
  int dll = 0;  // largest k with a k-daddy-longlegs minor
  MinorModel dll_model;
};

MinorParams minor_parameters(const Graph& g, int budget = kMinorHostAdvisory);

int hadwiger_number(const Graph& g, MinorModel* model = nullptr,
                    int budget = kMinorHostAdvisory);

/// Specialised daddy-longlegs search: legs are single oriented edges, the
/// root is a component of the rest adjacent to every leg midpoint.
int dll_number(const Graph& g, MinorModel* model = nullptr);

/// Order of a longest path (Held-Karp style subset DP).
int path_number(const Graph& g, std::vector<int>* witness = nullptr, int budget = 16);

/// Exact minimum vertex cover by branching.
int vertex_cover_number(const Graph& g, std::vector<int>* witness = nullptr, int budget = 16);

/// V(T) minus the leaves of a DFS spanning tree (root 0 retained); a vertex
/// cover since DFS leaves are independent. K1 yields the empty set.
std::vector<int> dfs_cover(const Graph& g);

struct PathCoverParams {
  int path_number = 0;
  std::vector<int> longest_path;
  int vertex_cover_number = 0;
  std::vector<int> min_cover;
  std::vector<int> dfs_cover;
};

PathCoverParams path_and_cover(const Graph& g, int budget = 16);

struct GridEmbedding {
  int n = 0;
  Graph grid;           // P_n [] P_n
  ProductGraph host;    // P_{2n-1} x P_{2n-1}
  std::vector<int> map;  // grid id r*n+c -> host product id
};

/// Diagonal embedding of the n-grid into P_{2n-1} x P_{2n-1}; validated
/// edge-by-edge on construction.
GridEmbedding grid_embedding(int n);

/// G x K_2.
ProductGraph double_cover(const Graph& g);

struct BipartiteSubgraphLB {
  Graph subgraph;          // spanning bipartite subgraph, >= m/2 edges
  std::vector<int> sides;  // the cut sides
  int tw_lower = 0;        // exact treewidth of the subgraph
};

/// Deterministic local-max-cut bipartite subgraph; its treewidth is a
/// certified lower bound for the treewidth of the double cover.
BipartiteSubgraphLB bipartite_subgraph_lb(const Graph& g, int width_budget = 18);

// --- switching machinery ----------------------------------------------------

/// A fixed properly 2-coloured bipartite subgraph (vertex list + colours).
struct ColouredSubgraph {
  std::vector<int> vertices;
  std::vector<int> colours;  // 0/1, parallel to vertices
};

struct SelectResult {
  std::vector<int> selected;              // indices of kept paths, >= k/2
  std::vector<int> switched;              // hosts whose colouring was flipped
  std::vector<std::pair<int, int>> joins;  // host pair joined by each path
  std::vector<int> union_colouring;       // colour per graph vertex, -1 outside
};

/// Keeps >= k/2 of the connecting paths so that hosts + kept paths are
/// bipartite, by majority switching of host colourings.
SelectResult select_bipartite_paths(const Graph& g, const std::vector<ColouredSubgraph>& hosts,
                                    const std::vector<std::vector<int>>& paths);

struct PathSystem {
  std::vector<std::vector<int>> trunks;
  struct Link {
    int i = 0, j = 0;
    std::vector<std::vector<int>> paths;  // 2k disjoint trunk-to-trunk paths
  };
  std::vector<Link> links;
};

struct LiftedPaths {
  ProductGraph cover;                                  // G x K_2
  std::vector<std::vector<int>> trunks;                // lifted trunks
  std::vector<std::pair<int, int>> x_pairs;            // kept pairs, >= half
  std::vector<std::vector<std::vector<int>>> linkages;  // per kept pair, >= k paths
};

/// Lifts the trunk system into the double cover through a parity-consistent
/// colouring; keeps at least half the linked pairs with at least half of
/// each kept pair's paths.
LiftedPaths lift_linked_paths(const Graph& g, const PathSystem& sys);

struct GridLikeMinor {
  std::vector<std::vector<int>> paths;
  int order = 0;
  MinorModel model;  // K_order model in the intersection graph of the paths
};

/// Checks the paths, bipartiteness of their intersection graph and the
/// stored clique model; a valid witness forces tw >= floor(order/2) - 1.
std::vector<std::string> validate_grid_like_minor(const Graph& g, const GridLikeMinor& glm);

struct LinkageResult {
  bool found = false;
  std::vector<std::vector<int>> paths;  // k internally disjoint A-B paths
  std::vector<int> cut;                 // a separating vertex set < k otherwise
};

/// Exact via unit-capacity vertex-split max-flow between the contracted sets.
LinkageResult find_disjoint_linkage(const Graph& g, const std::vector<int>& a_side,
                                    const std::vector<int>& b_side, int k, int budget = 32);

/// Maximum number of internally disjoint u-v paths (endpoints uncapped);
/// u and v must be distinct and non-adjacent for Menger connectivity use.
int internally_disjoint_paths(const Graph& g, int u, int v);

/// Builds the intersection graph of a path family (paths as vertices,
/// edges for shared graph vertices).
Graph intersection_graph(const std::vector<std::vector<int>>& paths, int universe);

/// linkage search -> majority switching -> double-cover lift -> clique minor
/// of the intersection graph. Certificate-validity only.
GridLikeMinor glm_pipeline(const Graph& g, const std::vector<std::vector<int>>& trunks, int k);

}  // namespace prodwidth
