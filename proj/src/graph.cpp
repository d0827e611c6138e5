#include "prodwidth/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodwidth {

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  m_++;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; v++) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; v++) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; u++)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < vertices.size(); i++) {
    int v = vertices[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (pos[v] != -1) throw std::invalid_argument("induced: repeated vertex");
    pos[v] = int(i);
  }
  Graph h(int(vertices.size()));
  for (size_t i = 0; i < vertices.size(); i++)
    for (size_t j = i + 1; j < vertices.size(); j++)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(int(i), int(j));
  return h;
}

Graph Graph::induced(const VertexSet& vertices) const { return induced(vertices.to_vector()); }

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const auto& g : parts) n += g.n();
  Graph out(n);
  int base = 0;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges()) out.add_edge(base + u, base + v);
    base += g.n();
  }
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n(), false);
  for (int s = 0; s < g.n(); s++) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  return components(g).size() == 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); s++) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n(), -1);
  dist[src] = 0;
  std::vector<int> queue{src};
  for (size_t head = 0; head < queue.size(); head++) {
    int v = queue[head];
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("diameter: graph must be connected");
  int d = 0;
  for (int v = 0; v < g.n(); v++)
    for (int x : bfs_distances(g, v)) d = std::max(d, x);
  return d;
}

BasicParams basic_params(const Graph& g) {
  BasicParams p;
  p.n = g.n();
  p.m = g.m();
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  p.component_list = components(g);
  for (const auto& c : p.component_list)
    p.max_component_order = std::max(p.max_component_order, int(c.size()));
  p.connected = g.n() == 0 || p.component_list.size() == 1;
  auto col = bipartition(g);
  p.bipartite = col.has_value();
  if (col) p.two_coloring = *col;
  return p;
}

bool is_path_in(const Graph& g, const std::vector<int>& path) {
  if (path.empty()) return false;
  std::vector<bool> seen(g.n(), false);
  for (int v : path) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = true;
  }
  for (size_t i = 0; i + 1 < path.size(); i++)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  return true;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  int start = s.first();
  if (start < 0) return false;
  VertexSet reached(g.n());
  reached.set(start);
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    VertexSet nb = g.neighbors(v) & s;
    for (int u = nb.first(); u >= 0; u = nb.next(u))
      if (!reached.test(u)) {
        reached.set(u);
        stack.push_back(u);
      }
  }
  return reached == s;
}

}  // namespace prodwidth
