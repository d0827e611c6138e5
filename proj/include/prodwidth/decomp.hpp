#pragma once

#include <string>
#include <vector>

#include "prodwidth/graph.hpp"
#include "prodwidth/products.hpp"

namespace prodwidth {

/// Bags indexed by the nodes of a host graph. Tree- and path-decompositions
/// are the host-specialised cases; width = max bag size - 1.
struct HDecomposition {
  Graph host;
  std::vector<std::vector<int>> bags;  // one per host node, sorted
  int target_n = 0;                    // order of the decomposed graph

  int width() const;
};

/// Empty list iff the three axioms hold (every vertex's node set is
/// non-empty and connected in the host, every edge is inside a bag, bags
/// reference valid ids). Violations name the offending vertex or edge.
std::vector<std::string> validate_decomposition(const Graph& g, const HDecomposition& d);

enum class WidthKind { Tree, Path };

inline constexpr int kTreewidthAdvisory = 14;
inline constexpr int kPathwidthAdvisory = 18;

struct WidthResult {
  int value = 0;
  HDecomposition decomposition;
};

/// Exact treewidth (elimination-order subset DP with memoised reachability
/// sets) or pathwidth (vertex-separation subset DP), solved per component.
/// `budget` caps the largest component order; 25 is a hard limit.
WidthResult exact_width(const Graph& g, WidthKind kind, int budget = -1);

/// Bags W_t x V(G2) under the pairing (a,v) -> a*v(G2)+v: a decomposition of
/// G1 (x) G2 (and so of the cartesian and direct subproducts) on the same
/// host, width at most (k+1) v(G2) - 1.
HDecomposition lift_product(const Graph& g1, const HDecomposition& dec1, const Graph& g2);

/// Bags union of closed neighbourhoods: decomposition of square(g) with
/// width at most (k+1)(Delta+1) - 1.
HDecomposition lift_square(const Graph& g, const HDecomposition& dec);

/// Decomposition of G1 x G2 from a vertex cover of G1 and a decomposition of
/// G2: cover-cliqueified lift through square(G2), then one host subdivision
/// per remaining product vertex. Width at most |cover| (k+1)(Delta(G2)+1).
HDecomposition vc_subdivision_decomp(const Graph& g1, const std::vector<int>& cover,
                                     const Graph& g2, const HDecomposition& dec2);

struct GknDecomposition {
  Graph factor;
  ProductGraph prod;  // factor (x) factor, strong
  HDecomposition dec;
};

/// Explicit decomposition of G_{k,n} (x) G_{k,n} whose host is three paths
/// joined at one node; every bag has at most 6n + (k+1)^2 vertices.
GknDecomposition gkn_decomposition(int k, int n);

}  // namespace prodwidth
