#include "prodwidth/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>

#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"
#include "prodwidth/multipartite.hpp"

namespace prodwidth {

DegenProfile degeneracy_exact(const Graph& g) {
  int n = g.n();
  DegenProfile prof;
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; v++) deg[v] = g.degree(v);
  for (int step = 0; step < n; step++) {
    int pick = -1;
    for (int v = 0; v < n; v++)
      if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    removed[pick] = true;
    prof.order.push_back(pick);
    prof.step_degrees.push_back(deg[pick]);
    prof.degeneracy = std::max(prof.degeneracy, deg[pick]);
    for (int u = g.neighbors(pick).first(); u >= 0; u = g.neighbors(pick).next(u))
      if (!removed[u]) deg[u]--;
  }
  return prof;
}

void FactorStats::validate() const {
  if (!(1 <= s && s <= d && d <= max_degree && s <= t && t <= max_degree))
    throw std::invalid_argument("factor stats must satisfy s <= d <= Delta and s <= t <= Delta");
}

std::pair<long long, long long> bounds_direct(const FactorStats& f1, const FactorStats& f2) {
  f1.validate();
  f2.validate();
  long long lower = std::max<long long>(
      {(long long)f1.d * f2.d,
       std::min<long long>((long long)f1.s * f2.t, (long long)f2.s * f1.t),
       std::min<long long>(f1.max_degree, f2.max_degree)});
  long long upper =
      std::min<long long>((long long)f1.d * f2.max_degree, (long long)f2.d * f1.max_degree);
  return {lower, upper};
}

long long strong_cbg_f(int s1, int t1, int s2, int t2) {
  if (!(1 <= s1 && s1 <= t1 && 1 <= s2 && s2 <= t2))
    throw std::invalid_argument("strong_cbg_f: requires t_i >= s_i >= 1");
  long long middle = std::min<long long>(
      {(long long)t1 + t2, (long long)s1 * (t2 + 1), (long long)s2 * (t1 + 1)});
  return std::max<long long>({(long long)s1 + s2 + (long long)s1 * s2, middle,
                              std::min<long long>((long long)s1 * t2, (long long)s2 * t1)});
}

std::pair<long long, long long> bounds_strong(const FactorStats& f1, const FactorStats& f2) {
  f1.validate();
  f2.validate();
  long long g = std::max<long long>(
      {(long long)f1.d + f2.d + (long long)f1.d * f2.d, strong_cbg_f(f1.s, f1.t, f2.s, f2.t),
       std::min<long long>(f1.max_degree, f2.max_degree) + 1});
  long long h = f1.d + f2.d +
                std::min<long long>((long long)f1.d * f2.max_degree,
                                    (long long)f2.d * f1.max_degree);
  return {g, h};
}

namespace {

Graph witness_factor(const FactorStats& f) {
  f.validate();
  return disjoint_union({regular_circulant(f.d), complete_multipartite({f.s, f.t}),
                         star_graph(f.max_degree)});
}

}  // namespace

std::pair<Graph, Graph> witness_direct_lower(const FactorStats& f1, const FactorStats& f2) {
  return {witness_factor(f1), witness_factor(f2)};
}

std::pair<Graph, Graph> witness_strong_lower(const FactorStats& f1, const FactorStats& f2) {
  return {witness_factor(f1), witness_factor(f2)};
}

std::pair<Graph, Graph> witness_strong_upper(int k1, int k2, int d1, int d2) {
  if (k1 < 1 || k2 < 1 || d1 < 1 || d2 < 1)
    throw std::invalid_argument("witness_strong_upper: parameters must be >= 1");
  auto build = [](int k, int d) {
    int a = d + 1;              // clique
    int b = (d + 1) * (k - 1);  // independent set
    Graph g(a + b);
    for (int i = 0; i < a; i++)
      for (int j = i + 1; j < a; j++) g.add_edge(i, j);
    for (int j = 0; j < b; j++)
      for (int off = 0; off < d; off++) g.add_edge(a + j, (j + off) % a);
    return g;
  };
  return {build(k1, d1), build(k2, d2)};
}

std::vector<std::pair<int, int>> bipartite_pairs(const Graph& g, int budget) {
  if (g.n() > budget) throw budget_error("bipartite_pairs: graph exceeds the search budget");
  auto feasible = [&](int s, int t) {
    if (s + t > g.n()) return false;
    MultipartitePattern p{{s, t}, 0};
    return oracle_subgraph(g, p, g.n()).has_value();
  };
  std::vector<std::pair<int, int>> out;
  for (int s = 1; 2 * s <= g.n(); s++) {
    if (!feasible(s, s)) break;  // K_{s',s'} for s' > s contains K_{s,s}
    int t = s;
    while (feasible(s, t + 1)) t++;
    if (!out.empty() && out.back().second == t) out.pop_back();  // dominated by larger s
    out.emplace_back(s, t);
  }
  return out;
}

FactorStats stats_with_pair(const Graph& g, std::pair<int, int> st) {
  FactorStats f;
  f.d = degeneracy_exact(g).degeneracy;
  f.max_degree = g.max_degree();
  f.s = st.first;
  f.t = st.second;
  return f;
}

}  // namespace prodwidth
