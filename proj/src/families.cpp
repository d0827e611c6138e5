#include "prodwidth/families.hpp"

#include <numeric>
#include <stdexcept>

namespace prodwidth {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) g.add_edge(i, j);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts, int overlay) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("part sizes must be non-negative");
  if (overlay < 0) throw std::invalid_argument("overlay must be non-negative");
  int n = overlay + std::accumulate(parts.begin(), parts.end(), 0);
  Graph g(n);
  std::vector<int> part_of(n);  // parts get 0..d-1, overlay gets d
  int v = 0;
  for (size_t i = 0; i < parts.size(); i++)
    for (int j = 0; j < parts[i]; j++) part_of[v++] = int(i);
  for (int j = 0; j < overlay; j++) part_of[v++] = int(parts.size());
  int d = int(parts.size());
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++)
      if (part_of[a] != part_of[b] || part_of[a] == d) g.add_edge(a, b);
  return g;
}

Graph star_graph(int leaves) { return complete_multipartite({1, leaves}); }

Graph daddy_longlegs(int k) {
  if (k < 0) throw std::invalid_argument("daddy_longlegs: k must be non-negative");
  Graph g(2 * k + 1);
  for (int i = 1; i <= k; i++) {
    g.add_edge(0, i);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph grid_graph(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("grid sizes must be non-negative");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
  Graph g(n);
  for (int o : offsets) {
    if (o <= 0 || o >= n) throw std::invalid_argument("circulant offset out of range");
    for (int v = 0; v < n; v++) g.add_edge(v, (v + o) % n);
  }
  return g;
}

Graph regular_circulant(int d, int min_order) {
  if (d < 0) throw std::invalid_argument("regular_circulant: degree must be non-negative");
  int n = std::max(min_order, d + 1);
  if (d == 0) return Graph(std::max(n, 1));
  if (d % 2 == 1 && n % 2 == 1) n++;  // antipodal chord needs even order
  std::vector<int> offsets;
  for (int o = 1; o <= d / 2; o++) offsets.push_back(o);
  if (d % 2 == 1) offsets.push_back(n / 2);
  return circulant_graph(n, offsets);
}

Graph gkn_graph(int k, int n) {
  if (k < 0 || n < k + 1) throw std::invalid_argument("gkn_graph requires n >= k+1 >= 1");
  int path_len = n - k;  // path v_0 .. v_{path_len-1}
  Graph g(n);
  for (int i = 0; i + 1 < path_len; i++) g.add_edge(i, i + 1);
  // K_{k+1} on {v_0} + the k extra vertices path_len..n-1
  std::vector<int> clique{0};
  for (int i = path_len; i < n; i++) clique.push_back(i);
  for (size_t a = 0; a < clique.size(); a++)
    for (size_t b = a + 1; b < clique.size(); b++) g.add_edge(clique[a], clique[b]);
  return g;
}

Graph square(const Graph& g) {
  Graph h(g.n());
  for (int v = 0; v < g.n(); v++) {
    VertexSet reach = g.neighbors(v);
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      reach |= g.neighbors(u);
    for (int u = reach.next(v); u >= 0; u = reach.next(u)) h.add_edge(v, u);
  }
  return h;
}

Graph generate(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  auto param = [&](size_t i) -> int {
    if (i >= spec.params.size()) throw std::invalid_argument("family spec: missing parameter");
    return spec.params[i];
  };
  switch (spec.kind) {
    case K::Path:
      return path_graph(param(0));
    case K::Cycle:
      return cycle_graph(param(0));
    case K::Complete:
      return complete_graph(param(0));
    case K::CompleteMultipartite: {
      std::vector<int> parts = spec.params;
      int overlay = 0;
      if (!parts.empty()) {
        overlay = parts.back();
        parts.pop_back();
      }
      return complete_multipartite(parts, overlay);
    }
    case K::Star:
      return star_graph(param(0));
    case K::DaddyLonglegs:
      return daddy_longlegs(param(0));
    case K::Grid:
      return grid_graph(param(0), param(1));
    case K::Circulant:
      return circulant_graph(param(0), spec.offsets);
    case K::DisjointUnion: {
      std::vector<Graph> gs;
      for (const auto& m : spec.members) gs.push_back(generate(m));
      return disjoint_union(gs);
    }
    case K::Gkn:
      return gkn_graph(param(0), param(1));
  }
  throw std::invalid_argument("family spec: unknown kind");
}

}  // namespace prodwidth
