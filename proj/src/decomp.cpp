#include "prodwidth/decomp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"

namespace prodwidth {

int HDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, int(b.size()) - 1);
  return w;
}

std::vector<std::string> validate_decomposition(const Graph& g, const HDecomposition& d) {
  std::vector<std::string> out;
  if (int(d.bags.size()) != d.host.n()) {
    out.push_back("bag count does not match host order");
    return out;
  }
  for (const auto& bag : d.bags)
    for (int v : bag)
      if (v < 0 || v >= g.n()) {
        out.push_back("bag references vertex " + std::to_string(v) + " outside the graph");
        return out;
      }
  std::vector<VertexSet> nodes_of(g.n(), VertexSet(d.host.n()));
  for (int t = 0; t < d.host.n(); t++)
    for (int v : d.bags[t]) nodes_of[v].set(t);
  for (int v = 0; v < g.n(); v++) {
    if (nodes_of[v].empty()) {
      out.push_back("vertex " + std::to_string(v) + " appears in no bag");
    } else if (!is_connected_set(d.host, nodes_of[v])) {
      out.push_back("vertex " + std::to_string(v) + " has a disconnected node set");
    }
  }
  for (auto [u, v] : g.edges())
    if (!nodes_of[u].intersects(nodes_of[v]))
      out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") is covered by no bag");
  return out;
}

namespace {

// Vertices outside S u {v} reachable from v through S. Mask-based; the
// caller guarantees n <= 25.
uint32_t reach_outside(const std::vector<uint32_t>& adj, int v, uint32_t s) {
  uint32_t visited = uint32_t(1) << v;
  uint32_t stack = uint32_t(1) << v;
  while (stack) {
    int u = std::countr_zero(stack);
    stack &= stack - 1;
    uint32_t fresh = adj[u] & ~visited;
    visited |= fresh;
    stack |= fresh & s;
  }
  return visited & ~s & ~(uint32_t(1) << v);
}

// Treewidth of one component by the elimination-order DP; returns the
// elimination order realising it.
int treewidth_component(const Graph& g, std::vector<int>& order) {
  int n = g.n();
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint32_t(1) << v;
    adj[v] |= uint32_t(1) << u;
  }
  size_t size = size_t(1) << n;
  std::vector<uint8_t> f(size, 0);
  for (uint32_t s = 1; s < size; s++) {
    int best = 255;
    for (uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t prev = s & ~(uint32_t(1) << v);
      int q = std::popcount(reach_outside(adj, v, prev));
      best = std::min(best, std::max<int>(f[prev], q));
    }
    f[s] = uint8_t(best);
  }
  // walk back: the chosen vertex is the last eliminated within s
  order.assign(n, -1);
  uint32_t s = uint32_t(size - 1);
  for (int pos = n - 1; pos >= 0; pos--) {
    for (uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t prev = s & ~(uint32_t(1) << v);
      int q = std::popcount(reach_outside(adj, v, prev));
      if (std::max<int>(f[prev], q) == f[s]) {
        order[pos] = v;
        s = prev;
        break;
      }
    }
  }
  return f[size - 1];
}

// Tree decomposition from an elimination order: bag(v) = {v} + the vertices
// reachable through the earlier ones; node of v attaches to the node of its
// first later bag member.
HDecomposition tree_dec_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.n();
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint32_t(1) << v;
    adj[v] |= uint32_t(1) << u;
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[order[i]] = i;
  HDecomposition dec;
  dec.target_n = n;
  dec.host = Graph(n);
  dec.bags.resize(n);
  uint32_t eliminated = 0;
  for (int i = 0; i < n; i++) {
    int v = order[i];
    uint32_t others = reach_outside(adj, v, eliminated);
    dec.bags[i].push_back(v);
    int parent = -1;
    for (uint32_t rest = others; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      dec.bags[i].push_back(u);
      if (parent == -1 || pos[u] < pos[parent]) parent = u;
    }
    std::sort(dec.bags[i].begin(), dec.bags[i].end());
    if (parent != -1) dec.host.add_edge(i, pos[parent]);
    else if (i + 1 < n) dec.host.add_edge(i, i + 1);  // keep the host a tree
    eliminated |= uint32_t(1) << v;
  }
  return dec;
}

// Pathwidth (= vertex separation) of one component, with the layout.
int pathwidth_component(const Graph& g, std::vector<int>& layout) {
  int n = g.n();
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint32_t(1) << v;
    adj[v] |= uint32_t(1) << u;
  }
  size_t size = size_t(1) << n;
  auto boundary = [&](uint32_t s) {
    int b = 0;
    for (uint32_t rest = s; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[u] & ~s) b++;
    }
    return b;
  };
  std::vector<uint8_t> f(size, 0);
  for (uint32_t s = 1; s < size; s++) {
    int best = 255;
    for (uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      best = std::min<int>(best, f[s & ~(uint32_t(1) << v)]);
    }
    f[s] = uint8_t(std::max(best, boundary(s)));
  }
  layout.assign(n, -1);
  uint32_t s = uint32_t(size - 1);
  for (int pos = n - 1; pos >= 0; pos--) {
    for (uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t prev = s & ~(uint32_t(1) << v);
      if (std::max<int>(f[prev], boundary(s)) == f[s]) {
        layout[pos] = v;
        s = prev;
        break;
      }
    }
  }
  return f[size - 1];
}

// Path decomposition from a layout: bag i = {v_i} + boundary of the prefix
// before v_i.
HDecomposition path_dec_from_layout(const Graph& g, const std::vector<int>& layout) {
  int n = g.n();
  HDecomposition dec;
  dec.target_n = n;
  dec.host = path_graph(n);
  dec.bags.resize(n);
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[layout[i]] = i;
  for (int i = 0; i < n; i++) {
    dec.bags[i].push_back(layout[i]);
    for (int j = 0; j < i; j++) {
      int u = layout[j];
      for (int w = g.neighbors(u).first(); w >= 0; w = g.neighbors(u).next(w))
        if (pos[w] >= i) {
          dec.bags[i].push_back(u);
          break;
        }
    }
    std::sort(dec.bags[i].begin(), dec.bags[i].end());
  }
  return dec;
}

}  // namespace

WidthResult exact_width(const Graph& g, WidthKind kind, int budget) {
  if (budget < 0) budget = kind == WidthKind::Tree ? kTreewidthAdvisory : kPathwidthAdvisory;
  auto comps = components(g);
  for (const auto& c : comps) {
    if (int(c.size()) > budget)
      throw budget_error("exact_width: component of " + std::to_string(c.size()) +
                         " vertices exceeds the budget " + std::to_string(budget));
    if (int(c.size()) > 25)
      throw budget_error("exact_width: components beyond 25 vertices are not supported");
  }

  WidthResult res;
  res.value = g.n() == 0 ? -1 : 0;
  res.decomposition.target_n = g.n();
  if (g.n() == 0) {
    res.decomposition.host = Graph(1);
    res.decomposition.bags = {{}};
    return res;
  }

  std::vector<HDecomposition> parts;
  for (const auto& c : comps) {
    Graph sub = g.induced(c);
    std::vector<int> order;
    HDecomposition dec;
    int w;
    if (kind == WidthKind::Tree) {
      w = treewidth_component(sub, order);
      dec = tree_dec_from_order(sub, order);
    } else {
      w = pathwidth_component(sub, order);
      dec = path_dec_from_layout(sub, order);
    }
    res.value = std::max(res.value, w);
    for (auto& bag : dec.bags)
      for (int& v : bag) v = c[v];  // back to the original ids
    parts.push_back(std::move(dec));
  }

  // glue hosts: chain for trees, concatenation for paths
  HDecomposition& out = res.decomposition;
  out.host = Graph(0);
  int base = 0;
  std::vector<Graph> hosts;
  for (auto& p : parts) hosts.push_back(p.host);
  out.host = disjoint_union(hosts);
  std::vector<int> first_node, last_node;
  for (auto& p : parts) {
    first_node.push_back(base);
    last_node.push_back(base + p.host.n() - 1);
    for (auto& bag : p.bags) out.bags.push_back(std::move(bag));
    base += p.host.n();
  }
  for (size_t i = 0; i + 1 < parts.size(); i++)
    out.host.add_edge(kind == WidthKind::Path ? last_node[i] : first_node[i],
                      first_node[i + 1]);
  return res;
}

HDecomposition lift_product(const Graph& g1, const HDecomposition& dec1, const Graph& g2) {
  auto errs = validate_decomposition(g1, dec1);
  if (!errs.empty())
    throw std::invalid_argument("lift_product: input decomposition invalid: " + errs.front());
  HDecomposition out;
  out.host = dec1.host;
  out.target_n = g1.n() * g2.n();
  out.bags.resize(dec1.bags.size());
  for (size_t t = 0; t < dec1.bags.size(); t++) {
    for (int a : dec1.bags[t])
      for (int v = 0; v < g2.n(); v++) out.bags[t].push_back(a * g2.n() + v);
    std::sort(out.bags[t].begin(), out.bags[t].end());
  }
  return out;
}

HDecomposition lift_square(const Graph& g, const HDecomposition& dec) {
  auto errs = validate_decomposition(g, dec);
  if (!errs.empty())
    throw std::invalid_argument("lift_square: input decomposition invalid: " + errs.front());
  HDecomposition out;
  out.host = dec.host;
  out.target_n = g.n();
  out.bags.resize(dec.bags.size());
  for (size_t t = 0; t < dec.bags.size(); t++) {
    VertexSet bag(g.n());
    for (int v : dec.bags[t]) {
      bag.set(v);
      bag |= g.neighbors(v);
    }
    out.bags[t] = bag.to_vector();
  }
  return out;
}

HDecomposition vc_subdivision_decomp(const Graph& g1, const std::vector<int>& cover,
                                     const Graph& g2, const HDecomposition& dec2) {
  if (!is_connected(g1))
    throw std::invalid_argument("vc_subdivision_decomp: g1 must be connected");
  VertexSet in_cover(g1.n());
  for (int v : cover) {
    if (v < 0 || v >= g1.n())
      throw std::invalid_argument("vc_subdivision_decomp: cover vertex out of range");
    in_cover.set(v);
  }
  for (auto [u, v] : g1.edges())
    if (!in_cover.test(u) && !in_cover.test(v))
      throw std::invalid_argument("vc_subdivision_decomp: the given set is not a vertex cover");

  Graph sq = square(g2);
  HDecomposition dec_sq = lift_square(g2, dec2);  // validates dec2

  int n2 = g2.n();
  std::vector<std::vector<int>> bags(dec_sq.bags.size());
  for (size_t t = 0; t < dec_sq.bags.size(); t++) {
    for (int a : cover)
      for (int u : dec_sq.bags[t]) bags[t].push_back(a * n2 + u);
    std::sort(bags[t].begin(), bags[t].end());
  }
  // mutable host while we subdivide
  int host_n = dec_sq.host.n();
  std::vector<std::pair<int, int>> host_edges = dec_sq.host.edges();

  std::vector<VertexSet> bag_sets;  // of sq vertices, to test N2(v) containment
  for (const auto& b : dec_sq.bags) {
    VertexSet s(n2);
    for (int u : b) s.set(u);
    bag_sets.push_back(s);
  }

  for (int l = 0; l < g1.n(); l++) {
    if (in_cover.test(l)) continue;
    for (int v = 0; v < n2; v++) {
      // host node whose square-bag contains N2(v); exists since N2(v) is a
      // clique in square(g2)
      int x = -1;
      for (size_t t = 0; t < bag_sets.size(); t++)
        if (g2.neighbors(v).is_subset_of(bag_sets[t])) {
          x = int(t);
          break;
        }
      if (x < 0) throw std::logic_error("vc_subdivision_decomp: no bag covers a neighbourhood");
      int y = -1;  // lowest-id host neighbour of x
      for (auto& e : host_edges) {
        if (e.first == x && (y < 0 || e.second < y)) y = e.second;
        if (e.second == x && (y < 0 || e.first < y)) y = e.first;
      }
      int z = host_n++;
      std::vector<int> zbag = bags[x];
      zbag.push_back(l * n2 + v);
      std::sort(zbag.begin(), zbag.end());
      bags.push_back(std::move(zbag));
      VertexSet xset = bag_sets[x];
      bag_sets.push_back(std::move(xset));
      if (y < 0) {
        host_edges.emplace_back(x, z);  // host was a single node
      } else {
        for (auto& e : host_edges)
          if ((e.first == x && e.second == y) || (e.first == y && e.second == x)) {
            e = {x, z};
            break;
          }
        host_edges.emplace_back(z, y);
      }
    }
  }

  HDecomposition out;
  out.host = Graph::from_edges(host_n, host_edges);
  out.bags = std::move(bags);
  out.target_n = g1.n() * n2;
  return out;
}

GknDecomposition gkn_decomposition(int k, int n) {
  GknDecomposition out;
  out.factor = gkn_graph(k, n);  // validates the parameters
  out.prod = product(out.factor, out.factor, ProductKind::Strong);
  int ntilde = n - k;
  std::vector<int> clique{0};
  for (int i = ntilde; i < n; i++) clique.push_back(i);

  auto id = [n](int a, int b) { return a * n + b; };
  std::vector<int> shared;  // X: everything with a v0 coordinate
  for (int u = 0; u < n; u++) {
    shared.push_back(id(0, u));
    if (u != 0) shared.push_back(id(u, 0));
  }

  HDecomposition dec;
  dec.target_n = n * n;
  int paths = std::max(0, ntilde - 1);
  dec.host = Graph(1 + 3 * paths);
  auto cnode = [&](int i) { return 1 + (i - 1); };
  auto dnode = [&](int i) { return 1 + paths + (i - 1); };
  auto lnode = [&](int i) { return 1 + 2 * paths + (i - 1); };
  if (paths > 0) {
    dec.host.add_edge(0, cnode(1));
    dec.host.add_edge(0, dnode(1));
    dec.host.add_edge(0, lnode(1));
    for (int i = 1; i < paths; i++) {
      dec.host.add_edge(cnode(i), cnode(i + 1));
      dec.host.add_edge(dnode(i), dnode(i + 1));
      dec.host.add_edge(lnode(i), lnode(i + 1));
    }
  }
  dec.bags.resize(dec.host.n());

  std::vector<int> wy = shared;
  for (int a : clique)
    for (int b : clique) wy.push_back(id(a, b));
  dec.bags[0] = wy;

  for (int i = 1; i <= paths; i++) {
    std::vector<int> cb = shared, db = shared;
    for (int a : clique) {
      cb.push_back(id(a, i - 1));
      cb.push_back(id(a, i));
      db.push_back(id(i - 1, a));
      db.push_back(id(i, a));
    }
    dec.bags[cnode(i)] = cb;
    dec.bags[dnode(i)] = db;
    std::vector<int> lb = shared;
    for (int s = i - 1; s <= ntilde - 1; s++) {
      lb.push_back(id(i - 1, s));
      lb.push_back(id(i, s));
      lb.push_back(id(s, i - 1));
      lb.push_back(id(s, i));
    }
    dec.bags[lnode(i)] = lb;
  }
  for (auto& bag : dec.bags) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  out.dec = std::move(dec);
  return out;
}

}  // namespace prodwidth
