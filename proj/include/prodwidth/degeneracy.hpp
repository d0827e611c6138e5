#pragma once

#include <utility>
#include <vector>

#include "prodwidth/graph.hpp"

namespace prodwidth {

/// Min-degree elimination certificate: the peeled order (lowest id breaks
/// ties) and each vertex's degree at removal time; the degeneracy is the
/// maximum of those degrees.
struct DegenProfile {
  int degeneracy = 0;
  std::vector<int> order;
  std::vector<int> step_degrees;
};

DegenProfile degeneracy_exact(const Graph& g);

/// Per-factor data feeding the direct/strong bound formulas: degeneracy d,
/// maximum degree, and a complete-bipartite subgraph K_{s,t} present in the
/// factor (s <= t).
struct FactorStats {
  int d = 0;
  int max_degree = 0;
  int s = 0;
  int t = 0;

  void validate() const;  // s <= d <= max_degree, s <= t <= max_degree
};

/// lower = max{d1 d2, min{s1 t2, s2 t1}, min{D1, D2}},
/// upper = min{d1 D2, d2 D1}.
std::pair<long long, long long> bounds_direct(const FactorStats& f1, const FactorStats& f2);

/// Degeneracy of K_{s1,t1} (strong) K_{s2,t2}.
long long strong_cbg_f(int s1, int t1, int s2, int t2);

/// lower g = max{d1+d2+d1 d2, f(s1,t1,s2,t2), min{D1,D2}+1},
/// upper h = d1+d2+min{d1 D2, d2 D1}.
std::pair<long long, long long> bounds_strong(const FactorStats& f1, const FactorStats& f2);

/// Factor pair attaining the direct-product lower bound: each factor is the
/// disjoint union of a d-regular circulant, K_{s,t} and K_{1,Delta}.
std::pair<Graph, Graph> witness_direct_lower(const FactorStats& f1, const FactorStats& f2);

/// Same family; its strong product attains the strong lower bound g.
std::pair<Graph, Graph> witness_strong_lower(const FactorStats& f1, const FactorStats& f2);

/// Factor pair attaining the strong upper bound: factor i is a clique A_i on
/// d_i+1 vertices plus an independent set B_i of size (d_i+1)(k_i-1), with
/// B-vertex j attached to clique indices {j, .., j+d_i-1} mod (d_i+1).
std::pair<Graph, Graph> witness_strong_upper(int k1, int k2, int d1, int d2);

/// All Pareto-maximal (s, t) with s <= t and K_{s,t} present as a subgraph;
/// exhaustive, intended for factors of desk scale.
std::vector<std::pair<int, int>> bipartite_pairs(const Graph& g, int budget = 12);

/// Stats extracted from a raw graph with the given (s, t) choice.
FactorStats stats_with_pair(const Graph& g, std::pair<int, int> st);

}  // namespace prodwidth
