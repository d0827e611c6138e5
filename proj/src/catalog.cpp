#include "prodwidth/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "prodwidth/errors.hpp"

namespace prodwidth {

namespace {

// Iterated neighbourhood-multiset refinement. Returns a colour per vertex;
// colours are ranks of isomorphism-invariant signatures.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.n();
  std::vector<int> color(n);
  for (int v = 0; v < n; v++) color[v] = g.degree(v);
  for (int round = 0; round < n; round++) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; v++) {
      std::vector<int> s{color[v]};
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
        s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& p : sig) keys.push_back(p.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; v++)
      next[v] = int(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    if (next == color) break;
    color = next;
  }
  return color;
}

uint64_t code_for_ordering(const Graph& g, const std::vector<int>& ord) {
  uint64_t code = 0;
  int n = g.n();
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      code <<= 1;
      if (g.has_edge(ord[i], ord[j])) code |= 1;
    }
  return code;
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
  int n = g.n();
  if (n > 11) throw budget_error("canonical_code: brute force is limited to 11 vertices");
  if (n == 0) return 0;
  std::vector<int> color = refine_colors(g);

  // Group vertices by colour rank; orderings permute within groups only.
  std::vector<std::vector<int>> classes;
  int max_color = *std::max_element(color.begin(), color.end());
  classes.resize(max_color + 1);
  for (int v = 0; v < n; v++) classes[color[v]].push_back(v);
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [](const std::vector<int>& c) { return c.empty(); }),
                classes.end());

  long long total = 1;
  for (auto& c : classes) {
    for (size_t i = 2; i <= c.size(); i++) total *= (long long)i;
    if (total > 5'000'000) throw budget_error("canonical_code: too many candidate orderings");
  }

  uint64_t best = ~uint64_t(0);
  std::vector<int> ord;
  ord.reserve(n);
  while (true) {
    ord.clear();
    for (auto& c : classes) ord.insert(ord.end(), c.begin(), c.end());
    best = std::min(best, code_for_ordering(g, ord));
    int k = int(classes.size()) - 1;
    while (k >= 0 && !std::next_permutation(classes[k].begin(), classes[k].end())) k--;
    if (k < 0) break;
    for (size_t i = k + 1; i < classes.size(); i++)
      std::sort(classes[i].begin(), classes[i].end());
  }
  return best;
}

Graph graph_from_code(int n, uint64_t code) {
  Graph g(n);
  int bits = n * (n - 1) / 2;
  int bit = bits - 1;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++, bit--)
      if ((code >> bit) & 1) g.add_edge(i, j);
  return g;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_code(a) == canonical_code(b);
}

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 8) throw budget_error("all_graphs: catalogue covers 1..8 vertices");
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1));
  } else {
    const std::vector<Graph>& parents = all_graphs(n - 1);
    std::set<uint64_t> codes;
    for (const Graph& p : parents) {
      for (int mask = 0; mask < (1 << (n - 1)); mask++) {
        Graph child(n);
        for (auto [u, v] : p.edges()) child.add_edge(u, v);
        for (int v = 0; v < n - 1; v++)
          if ((mask >> v) & 1) child.add_edge(v, n - 1);
        codes.insert(canonical_code(child));
      }
    }
    for (uint64_t c : codes) out.push_back(graph_from_code(n, c));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> all_graphs_upto(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; k++)
    for (const Graph& g : all_graphs(k)) out.push_back(g);
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

std::vector<Graph> connected_graphs_upto(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; k++)
    for (const Graph& g : connected_graphs(k)) out.push_back(g);
  return out;
}

}  // namespace prodwidth
