#include "prodwidth/minors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "prodwidth/decomp.hpp"
#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"

namespace prodwidth {

std::vector<std::string> validate_model(const Graph& g, const Graph& h, const MinorModel& m) {
  std::vector<std::string> out;
  if (int(m.branch_sets.size()) != h.n()) {
    out.push_back("model has " + std::to_string(m.branch_sets.size()) + " branch sets for " +
                  std::to_string(h.n()) + " pattern vertices");
    return out;
  }
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < h.n(); i++) {
    if (m.branch_sets[i].empty()) {
      out.push_back("branch set " + std::to_string(i) + " is empty");
      continue;
    }
    VertexSet s(g.n());
    for (int v : m.branch_sets[i]) {
      if (v < 0 || v >= g.n()) {
        out.push_back("branch set " + std::to_string(i) + " references an invalid vertex");
        return out;
      }
      if (owner[v] != -1)
        out.push_back("vertex " + std::to_string(v) + " lies in branch sets " +
                      std::to_string(owner[v]) + " and " + std::to_string(i));
      owner[v] = i;
      s.set(v);
    }
    if (!is_connected_set(g, s))
      out.push_back("branch set " + std::to_string(i) + " is disconnected");
  }
  for (auto [hu, hv] : h.edges()) {
    bool linked = false;
    for (int a : m.branch_sets[hu]) {
      for (int b : m.branch_sets[hv])
        if (g.has_edge(a, b)) {
          linked = true;
          break;
        }
      if (linked) break;
    }
    if (!linked)
      out.push_back("pattern edge (" + std::to_string(hu) + "," + std::to_string(hv) +
                    ") has no connecting edge");
  }
  return out;
}

namespace {

// Branch-set search with exact-total iterative deepening: models are explored
// in ascending total branch-set size, so small witnesses surface quickly.
// Connected subsets are enumerated ESU style (each subset once, smallest
// vertex as seed).
struct MinorSearch {
  const std::vector<uint64_t>& adj;
  int n;
  long long nodes_left;

  const Graph& h;
  std::vector<int> h_order;      // pattern vertices, most-constrained first
  std::vector<uint64_t> branch;  // chosen branch sets (by h id)
  uint64_t used = 0;

  MinorSearch(const std::vector<uint64_t>& a, int nn, long long budget, const Graph& hh)
      : adj(a), n(nn), nodes_left(budget), h(hh), branch(hh.n(), 0) {}

  uint64_t full_mask() const { return n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1; }

  // Every assignment consumes exactly `remaining` vertices in total, so each
  // deepening level explores fresh territory only.
  bool assign(size_t pos, int remaining) {
    if (pos == h_order.size()) return remaining == 0;
    if (--nodes_left < 0) throw budget_error("find_minor: node budget exhausted");
    int hv = h_order[pos];
    std::vector<uint64_t> must_touch;
    for (size_t q = 0; q < pos; q++)
      if (h.has_edge(hv, h_order[q])) must_touch.push_back(branch[h_order[q]]);
    int parts_after = int(h_order.size() - pos - 1);
    uint64_t free = ~used & full_mask();
    int lo = pos + 1 == h_order.size() ? remaining : 1;
    int hi = remaining - parts_after;
    for (int size = lo; size <= hi; size++)
      if (try_size(pos, size, remaining, free, must_touch)) return true;
    return false;
  }

  bool try_size(size_t pos, int size, int remaining, uint64_t free,
                const std::vector<uint64_t>& must_touch) {
    for (uint64_t seeds = free; seeds;) {
      int s = std::countr_zero(seeds);
      seeds &= seeds - 1;
      uint64_t allowed = free & ~((uint64_t(2) << s) - 1);
      uint64_t seed_bit = uint64_t(1) << s;
      if (extend(pos, size, remaining, seed_bit, adj[s] & ~seed_bit, adj[s] & allowed, allowed,
                 must_touch))
        return true;
    }
    return false;
  }

  // ESU growth; pop a candidate, extend the pool with its exclusive
  // neighbours, never revisit a popped candidate deeper in this branch.
  bool extend(size_t pos, int size, int remaining, uint64_t subset, uint64_t nbhd, uint64_t ext,
              uint64_t allowed, const std::vector<uint64_t>& must_touch) {
    if (--nodes_left < 0) throw budget_error("find_minor: node budget exhausted");
    if (std::popcount(subset) == size) {
      for (uint64_t req : must_touch)
        if (!(nbhd & req)) return false;
      int hv = h_order[pos];
      branch[hv] = subset;
      used |= subset;
      if (assign(pos + 1, remaining - size)) return true;
      used &= ~subset;
      branch[hv] = 0;
      return false;
    }
    while (ext) {
      int w = std::countr_zero(ext);
      uint64_t wbit = uint64_t(1) << w;
      ext &= ~wbit;
      uint64_t grown_nbhd = (nbhd | adj[w]) & ~subset & ~wbit;
      uint64_t exclusive = adj[w] & allowed & ~subset & ~nbhd & ~wbit;
      if (extend(pos, size, remaining, subset | wbit, grown_nbhd, ext | exclusive, allowed,
                 must_touch))
        return true;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, int vertex_budget,
                                     long long node_budget) {
  if (g.n() > vertex_budget)
    throw budget_error("find_minor: host has " + std::to_string(g.n()) +
                       " vertices, budget " + std::to_string(vertex_budget));
  if (g.n() > 40) throw budget_error("find_minor: hosts beyond 40 vertices are unsupported");
  if (h.n() == 0) return MinorModel{};
  if (h.n() > g.n()) return std::nullopt;

  std::vector<uint64_t> adj(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint64_t(1) << v;
    adj[v] |= uint64_t(1) << u;
  }
  MinorSearch search(adj, g.n(), node_budget, h);
  // most-constrained-first: start at a max-degree vertex, then repeatedly
  // take the vertex with the most already-ordered neighbours
  std::vector<bool> placed(h.n(), false);
  for (int i = 0; i < h.n(); i++) {
    int best = -1, best_known = -1, best_deg = -1;
    for (int v = 0; v < h.n(); v++) {
      if (placed[v]) continue;
      int known = 0;
      for (int u = h.neighbors(v).first(); u >= 0; u = h.neighbors(v).next(u))
        known += placed[u];
      if (known > best_known || (known == best_known && h.degree(v) > best_deg)) {
        best = v;
        best_known = known;
        best_deg = h.degree(v);
      }
    }
    placed[best] = true;
    search.h_order.push_back(best);
  }

  for (int total = h.n(); total <= g.n(); total++)
    if (search.assign(0, total)) {
      MinorModel m;
      m.branch_sets.resize(h.n());
      for (int i = 0; i < h.n(); i++)
        for (uint64_t rest = search.branch[i]; rest;) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          m.branch_sets[i].push_back(v);
        }
      return m;
    }
  return std::nullopt;
}

int hadwiger_number(const Graph& g, MinorModel* model, int budget) {
  if (g.n() == 0) return 0;
  if (g.n() > budget) throw budget_error("hadwiger_number: graph exceeds the budget");
  int eta = 1;
  MinorModel best;
  best.branch_sets = {{0}};
  // per component; a clique minor lives inside one component
  for (const auto& comp : components(g)) {
    Graph sub = g.induced(comp);
    for (int t = eta + 1; t <= sub.n(); t++) {
      auto m = find_minor(sub, complete_graph(t), budget);
      if (!m) break;
      eta = t;
      best.branch_sets.assign(t, {});
      for (int i = 0; i < t; i++)
        for (int v : m->branch_sets[i]) best.branch_sets[i].push_back(comp[v]);
    }
  }
  if (model) *model = best;
  return eta;
}

int dll_number(const Graph& g, MinorModel* model) {
  if (g.n() == 0) {
    if (model) model->branch_sets.clear();
    return -1;  // not even W^(0)
  }
  if (model) model->branch_sets = {{0}};
  int best = 0;
  auto edges = g.edges();
  int kmax = (g.n() - 1) / 2;
  for (int k = 1; k <= kmax; k++) {
    // choose k disjoint edges, then a component of the rest adjacent to one
    // endpoint of each
    std::vector<int> pick;
    VertexSet used(g.n());
    bool found = false;
    MinorModel m;
    std::function<bool(size_t)> rec = [&](size_t from) {
      if (int(pick.size()) == k) {
        VertexSet rest = VertexSet::full(g.n());
        rest.subtract(used);
        if (rest.empty()) return false;
        Graph sub = g.induced(rest.to_vector());
        std::vector<int> ids = rest.to_vector();
        for (const auto& comp : components(sub)) {
          VertexSet cset(g.n());
          for (int v : comp) cset.set(ids[v]);
          VertexSet cnb(g.n());
          for (int v = cset.first(); v >= 0; v = cset.next(v)) cnb |= g.neighbors(v);
          bool ok = true;
          std::vector<std::pair<int, int>> legs;  // (middle u, tip v)
          for (int e : pick) {
            auto [a, b] = edges[e];
            if (cnb.test(a)) legs.emplace_back(a, b);
            else if (cnb.test(b)) legs.emplace_back(b, a);
            else {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          m.branch_sets.assign(2 * k + 1, {});
          m.branch_sets[0] = cset.to_vector();
          for (int i = 0; i < k; i++) {
            m.branch_sets[1 + i] = {legs[i].first};
            m.branch_sets[1 + k + i] = {legs[i].second};
          }
          return true;
        }
        return false;
      }
      for (size_t e = from; e < edges.size(); e++) {
        auto [a, b] = edges[e];
        if (used.test(a) || used.test(b)) continue;
        used.set(a);
        used.set(b);
        pick.push_back(int(e));
        if (rec(e + 1)) return true;
        pick.pop_back();
        used.reset(a);
        used.reset(b);
      }
      return false;
    };
    found = rec(0);
    if (!found) break;
    best = k;
    if (model) *model = m;
  }
  return best;
}

MinorParams minor_parameters(const Graph& g, int budget) {
  if (g.n() > budget) throw budget_error("minor_parameters: graph exceeds the budget");
  MinorParams out;
  out.eta = hadwiger_number(g, &out.eta_model, budget);
  out.dll = dll_number(g, &out.dll_model);
  return out;
}

int path_number(const Graph& g, std::vector<int>* witness, int budget) {
  if (g.n() == 0) return 0;
  int best = 0;
  std::vector<int> best_path;
  for (const auto& comp : components(g)) {
    if (int(comp.size()) > budget)
      throw budget_error("path_number: component exceeds the budget");
    Graph sub = g.induced(comp);
    int n = sub.n();
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : sub.edges()) {
      adj[u] |= uint32_t(1) << v;
      adj[v] |= uint32_t(1) << u;
    }
    std::vector<uint32_t> dp(size_t(1) << n, 0);  // ends reachable for mask
    for (int v = 0; v < n; v++) dp[uint32_t(1) << v] = uint32_t(1) << v;
    uint32_t best_mask = 1;
    for (uint32_t mask = 1; mask < dp.size(); mask++) {
      if (!dp[mask]) continue;
      if (std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
      for (uint32_t ends = dp[mask]; ends;) {
        int v = std::countr_zero(ends);
        ends &= ends - 1;
        for (uint32_t nxt = adj[v] & ~mask; nxt;) {
          int u = std::countr_zero(nxt);
          nxt &= nxt - 1;
          dp[mask | (uint32_t(1) << u)] |= uint32_t(1) << u;
        }
      }
    }
    int len = std::popcount(best_mask);
    if (len > best) {
      best = len;
      // reconstruct backwards
      best_path.clear();
      uint32_t mask = best_mask;
      int v = std::countr_zero(dp[mask]);
      while (true) {
        best_path.push_back(comp[v]);
        uint32_t prev = mask & ~(uint32_t(1) << v);
        if (!prev) break;
        int u = -1;
        for (uint32_t cand = dp[prev] & adj[v]; cand;) {
          u = std::countr_zero(cand);
          break;
        }
        if (u < 0) break;  // should not happen
        mask = prev;
        v = u;
      }
      std::reverse(best_path.begin(), best_path.end());
    }
  }
  if (witness) *witness = best_path;
  return best;
}

namespace {

void vc_branch(const Graph& g, const std::vector<std::pair<int, int>>& edges,
               std::vector<int>& current, std::vector<int>& best, VertexSet& in_cover) {
  int eu = -1, ev = -1;
  for (auto [u, v] : edges)
    if (!in_cover.test(u) && !in_cover.test(v)) {
      eu = u;
      ev = v;
      break;
    }
  if (eu == -1) {
    if (current.size() < best.size()) best = current;
    return;
  }
  if (current.size() + 1 >= best.size()) return;  // cannot improve
  for (int pick : {eu, ev}) {
    in_cover.set(pick);
    current.push_back(pick);
    vc_branch(g, edges, current, best, in_cover);
    current.pop_back();
    in_cover.reset(pick);
  }
}

}  // namespace

int vertex_cover_number(const Graph& g, std::vector<int>* witness, int budget) {
  if (g.n() > budget) throw budget_error("vertex_cover_number: graph exceeds the budget");
  std::vector<int> best, current;
  for (int v = 0; v < g.n(); v++)
    if (g.degree(v) > 0) best.push_back(v);  // trivial cover
  auto edges = g.edges();
  VertexSet in_cover(g.n());
  vc_branch(g, edges, current, best, in_cover);
  std::sort(best.begin(), best.end());
  if (witness) *witness = best;
  return int(best.size());
}

std::vector<int> dfs_cover(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("dfs_cover: graph must be connected");
  if (g.n() <= 1) return {};
  std::vector<bool> visited(g.n(), false);
  std::vector<bool> has_child(g.n(), false);
  // explicit stack, ascending neighbour order
  visited[0] = true;
  std::vector<int> state(g.n(), -1);
  std::vector<int> dfs_stack{0};
  while (!dfs_stack.empty()) {
    int v = dfs_stack.back();
    int next = -1;
    for (int u = g.neighbors(v).next(state[v]); u >= 0; u = g.neighbors(v).next(u)) {
      state[v] = u;
      if (!visited[u]) {
        next = u;
        break;
      }
    }
    if (next == -1) {
      dfs_stack.pop_back();
      continue;
    }
    visited[next] = true;
    has_child[v] = true;
    dfs_stack.push_back(next);
  }
  std::vector<int> cover;
  for (int v = 0; v < g.n(); v++)
    if (v == 0 || has_child[v]) cover.push_back(v);
  return cover;
}

PathCoverParams path_and_cover(const Graph& g, int budget) {
  PathCoverParams out;
  out.path_number = path_number(g, &out.longest_path, budget);
  out.vertex_cover_number = vertex_cover_number(g, &out.min_cover, budget);
  if (is_connected(g) && g.n() >= 1) out.dfs_cover = dfs_cover(g);
  return out;
}

GridEmbedding grid_embedding(int n) {
  if (n < 1) throw std::invalid_argument("grid_embedding: n must be positive");
  GridEmbedding out;
  out.n = n;
  out.grid = grid_graph(n, n);
  out.host = product(path_graph(2 * n - 1), path_graph(2 * n - 1), ProductKind::Direct);
  out.map.resize(n * n);
  for (int r = 0; r < n; r++)
    for (int c = 0; c < n; c++) out.map[r * n + c] = out.host.pair_id(r + c, n - 1 + r - c);
  for (auto [u, v] : out.grid.edges())
    if (!out.host.base.has_edge(out.map[u], out.map[v]))
      throw std::logic_error("grid_embedding: image misses a grid edge");
  return out;
}

ProductGraph double_cover(const Graph& g) {
  return product(g, complete_graph(2), ProductKind::Direct);
}

BipartiteSubgraphLB bipartite_subgraph_lb(const Graph& g, int width_budget) {
  BipartiteSubgraphLB out;
  out.sides.assign(g.n(), 0);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < g.n(); v++) {
      int cross = 0, same = 0;
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
        (out.sides[u] == out.sides[v] ? same : cross)++;
      if (same > cross) {
        out.sides[v] ^= 1;
        improved = true;
      }
    }
  }
  out.subgraph = Graph(g.n());
  for (auto [u, v] : g.edges())
    if (out.sides[u] != out.sides[v]) out.subgraph.add_edge(u, v);
  out.tw_lower = exact_width(out.subgraph, WidthKind::Tree, width_budget).value;
  return out;
}

// --- switching machinery -----------------------------------------------------

namespace {

struct PathEnds {
  int host_from = -1, host_to = -1;
  int colour_from = 0, colour_to = 0;  // base colours before switching
  int parity = 0;                      // (#edges) mod 2
};

// Shared hypothesis checks for the switching lemma inputs.
std::vector<PathEnds> classify_paths(const Graph& g, const std::vector<ColouredSubgraph>& hosts,
                                     const std::vector<std::vector<int>>& paths) {
  std::vector<int> host_of(g.n(), -1);
  std::vector<int> colour_of(g.n(), -1);
  for (size_t h = 0; h < hosts.size(); h++) {
    const auto& sub = hosts[h];
    if (sub.vertices.size() != sub.colours.size())
      throw std::invalid_argument("host " + std::to_string(h) + ": colour list size mismatch");
    for (size_t i = 0; i < sub.vertices.size(); i++) {
      int v = sub.vertices[i];
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("host " + std::to_string(h) + ": vertex out of range");
      if (host_of[v] != -1)
        throw std::invalid_argument("hosts are not vertex-disjoint at vertex " +
                                    std::to_string(v));
      host_of[v] = int(h);
      colour_of[v] = sub.colours[i] & 1;
    }
  }
  std::vector<int> interior_owner(g.n(), -1);
  std::vector<PathEnds> ends(paths.size());
  for (size_t p = 0; p < paths.size(); p++) {
    const auto& path = paths[p];
    if (path.size() < 2 || !is_path_in(g, path))
      throw std::invalid_argument("path " + std::to_string(p) + " is not a path in the graph");
    int hf = host_of[path.front()], ht = host_of[path.back()];
    if (hf < 0 || ht < 0 || hf == ht)
      throw std::invalid_argument("path " + std::to_string(p) +
                                  " must join two distinct hosts");
    for (size_t i = 1; i + 1 < path.size(); i++) {
      int v = path[i];
      if (host_of[v] != -1)
        throw std::invalid_argument("path " + std::to_string(p) +
                                    " passes through a host at vertex " + std::to_string(v));
      if (interior_owner[v] != -1)
        throw std::invalid_argument("paths " + std::to_string(interior_owner[v]) + " and " +
                                    std::to_string(p) + " share interior vertex " +
                                    std::to_string(v));
      interior_owner[v] = int(p);
    }
    ends[p] = {hf, ht, colour_of[path.front()], colour_of[path.back()],
               int((path.size() - 1) % 2)};
  }
  return ends;
}

// A connecting path admits a colouring consistent with both (switched)
// endpoint colours iff endpoint colours differ exactly when its length is odd.
bool agreeable(const PathEnds& e, const std::vector<int>& switched) {
  int cf = e.colour_from ^ switched[e.host_from];
  int ct = e.colour_to ^ switched[e.host_to];
  return (cf ^ ct) == e.parity;
}

// Majority switching: flip host colourings while that increases the number
// of agreeable items; afterwards every host sees at least as many agreeable
// as disagreeable items, so at least half the items are agreeable.
std::vector<int> majority_switch(int t, const std::vector<PathEnds>& items) {
  std::vector<int> switched(t, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < t; h++) {
      int agree = 0, disagree = 0;
      for (const auto& e : items) {
        if (e.host_from != h && e.host_to != h) continue;
        (agreeable(e, switched) ? agree : disagree)++;
      }
      if (disagree > agree) {
        switched[h] ^= 1;
        changed = true;
      }
    }
  }
  return switched;
}

}  // namespace

SelectResult select_bipartite_paths(const Graph& g, const std::vector<ColouredSubgraph>& hosts,
                                    const std::vector<std::vector<int>>& paths) {
  std::vector<PathEnds> ends = classify_paths(g, hosts, paths);
  SelectResult out;
  out.switched = majority_switch(int(hosts.size()), ends);
  out.union_colouring.assign(g.n(), -1);
  for (size_t h = 0; h < hosts.size(); h++)
    for (size_t i = 0; i < hosts[h].vertices.size(); i++)
      out.union_colouring[hosts[h].vertices[i]] =
          (hosts[h].colours[i] ^ out.switched[h]) & 1;
  for (size_t p = 0; p < paths.size(); p++) {
    out.joins.emplace_back(ends[p].host_from, ends[p].host_to);
    if (!agreeable(ends[p], out.switched)) continue;
    out.selected.push_back(int(p));
    int c = out.union_colouring[paths[p].front()];
    for (size_t i = 1; i + 1 < paths[p].size(); i++)
      out.union_colouring[paths[p][i]] = (c ^= 1);
  }

  // verify the guarantee: colour-consistent host edges plus the kept paths
  // form a bipartite graph, and our colouring is a proper 2-colouring of it
  std::vector<int> host_of(g.n(), -1);
  for (size_t h = 0; h < hosts.size(); h++)
    for (int v : hosts[h].vertices) host_of[v] = int(h);
  Graph uni(g.n());
  for (auto [u, v] : g.edges())
    if (host_of[u] != -1 && host_of[u] == host_of[v] &&
        out.union_colouring[u] != out.union_colouring[v])
      uni.add_edge(u, v);
  for (int p : out.selected)
    for (size_t i = 0; i + 1 < paths[p].size(); i++) uni.add_edge(paths[p][i], paths[p][i + 1]);
  for (auto [u, v] : uni.edges())
    if (out.union_colouring[u] == out.union_colouring[v])
      throw std::logic_error("select_bipartite_paths: produced a monochromatic edge");
  if (!bipartition(uni))
    throw std::logic_error("select_bipartite_paths: union is not bipartite");
  if (2 * out.selected.size() < paths.size())
    throw std::logic_error("select_bipartite_paths: kept fewer than half the paths");
  return out;
}

LiftedPaths lift_linked_paths(const Graph& g, const PathSystem& sys) {
  // trunk validation + base colouring (alternate from each trunk head)
  std::vector<int> trunk_of(g.n(), -1);
  std::vector<int> base_colour(g.n(), -1);
  for (size_t t = 0; t < sys.trunks.size(); t++) {
    const auto& path = sys.trunks[t];
    if (path.empty() || !is_path_in(g, path))
      throw std::invalid_argument("trunk " + std::to_string(t) + " is not a path");
    for (size_t i = 0; i < path.size(); i++) {
      if (trunk_of[path[i]] != -1)
        throw std::invalid_argument("trunks are not disjoint at vertex " +
                                    std::to_string(path[i]));
      trunk_of[path[i]] = int(t);
      base_colour[path[i]] = int(i % 2);
    }
  }

  // linkage validation; classify each linkage path by endpoint parity
  struct LinkInfo {
    int i, j;
    std::vector<int> majority;  // indices of the majority class
    PathEnds pair_ends;         // agreeability proxy for the whole pair
  };
  std::vector<int> interior_owner(g.n(), -1);
  std::vector<LinkInfo> infos;
  for (size_t li = 0; li < sys.links.size(); li++) {
    const auto& link = sys.links[li];
    if (link.i < 0 || link.j < 0 || link.i >= int(sys.trunks.size()) ||
        link.j >= int(sys.trunks.size()) || link.i == link.j)
      throw std::invalid_argument("link " + std::to_string(li) + ": bad trunk pair");
    std::vector<PathEnds> ends(link.paths.size());
    VertexSet pair_used(g.n());
    for (size_t p = 0; p < link.paths.size(); p++) {
      const auto& path = link.paths[p];
      if (path.size() < 2 || !is_path_in(g, path))
        throw std::invalid_argument("linkage path is not a path");
      if (trunk_of[path.front()] != link.i || trunk_of[path.back()] != link.j)
        throw std::invalid_argument("linkage path endpoints not on its trunks");
      for (int v : path) {
        if (pair_used.test(v))
          throw std::invalid_argument("linkage paths of one pair are not disjoint");
        pair_used.set(v);
      }
      for (size_t q = 1; q + 1 < path.size(); q++) {
        int v = path[q];
        if (trunk_of[v] != -1)
          throw std::invalid_argument("linkage path interior touches a trunk");
        if (interior_owner[v] != -1)
          throw std::invalid_argument("linkage interiors are not disjoint");
        interior_owner[v] = int(li);
      }
      ends[p] = {link.i, link.j, base_colour[path.front()], base_colour[path.back()],
                 int((path.size() - 1) % 2)};
    }
    // majority class under the base colouring; ties go to the disagreeable side
    std::vector<int> no_switch(sys.trunks.size(), 0);
    std::vector<int> agree_idx, disagree_idx;
    for (size_t p = 0; p < ends.size(); p++)
      (agreeable(ends[p], no_switch) ? agree_idx : disagree_idx).push_back(int(p));
    LinkInfo info;
    info.i = link.i;
    info.j = link.j;
    info.majority = agree_idx.size() > disagree_idx.size() ? agree_idx : disagree_idx;
    // all majority paths share one parity relation; represent it by one item
    info.pair_ends = ends[info.majority.front()];
    infos.push_back(std::move(info));
  }

  // switch trunk colourings so that at least half the pairs are agreeable
  std::vector<PathEnds> pair_items;
  for (const auto& info : infos) pair_items.push_back(info.pair_ends);
  std::vector<int> switched = majority_switch(int(sys.trunks.size()), pair_items);

  LiftedPaths out;
  out.cover = double_cover(g);
  auto lift_id = [&](int v, int colour) { return out.cover.pair_id(v, colour); };
  auto phi = [&](int v) { return base_colour[v] ^ switched[trunk_of[v]]; };

  for (const auto& trunk : sys.trunks) {
    std::vector<int> lifted;
    for (int v : trunk) lifted.push_back(lift_id(v, phi(v)));
    if (!is_path_in(out.cover.base, lifted))
      throw std::logic_error("lift_linked_paths: lifted trunk is not a path");
    out.trunks.push_back(std::move(lifted));
  }
  for (size_t li = 0; li < infos.size(); li++) {
    if (!agreeable(infos[li].pair_ends, switched)) continue;
    out.x_pairs.emplace_back(infos[li].i, infos[li].j);
    std::vector<std::vector<int>> lifted_paths;
    for (int p : infos[li].majority) {
      const auto& path = sys.links[li].paths[p];
      std::vector<int> lifted;
      int c = phi(path.front());
      for (size_t q = 0; q < path.size(); q++) {
        lifted.push_back(lift_id(path[q], c));
        c ^= 1;
      }
      if (out.cover.coords(lifted.back()).second != phi(path.back()))
        throw std::logic_error("lift_linked_paths: endpoint colour mismatch");
      if (!is_path_in(out.cover.base, lifted))
        throw std::logic_error("lift_linked_paths: lifted linkage is not a path");
      lifted_paths.push_back(std::move(lifted));
    }
    out.linkages.push_back(std::move(lifted_paths));
  }
  if (2 * out.x_pairs.size() < sys.links.size())
    throw std::logic_error("lift_linked_paths: kept fewer than half the pairs");
  return out;
}

Graph intersection_graph(const std::vector<std::vector<int>>& paths, int universe) {
  Graph ig(int(paths.size()));
  std::vector<VertexSet> sets;
  for (const auto& p : paths) {
    VertexSet s(universe);
    for (int v : p) s.set(v);
    sets.push_back(std::move(s));
  }
  for (size_t i = 0; i < paths.size(); i++)
    for (size_t j = i + 1; j < paths.size(); j++)
      if (sets[i].intersects(sets[j])) ig.add_edge(int(i), int(j));
  return ig;
}

std::vector<std::string> validate_grid_like_minor(const Graph& g, const GridLikeMinor& glm) {
  std::vector<std::string> out;
  for (size_t p = 0; p < glm.paths.size(); p++)
    if (!is_path_in(g, glm.paths[p]))
      out.push_back("path " + std::to_string(p) + " is not a path in the graph");
  if (!out.empty()) return out;
  Graph ig = intersection_graph(glm.paths, g.n());
  if (!bipartition(ig)) out.push_back("the intersection graph is not bipartite");
  auto errs = validate_model(ig, complete_graph(glm.order), glm.model);
  for (auto& e : errs) out.push_back("clique model: " + e);
  return out;
}

// --- disjoint linkage (vertex-split max flow) --------------------------------

namespace {

struct FlowNet {
  int n;
  std::vector<std::vector<int>> to, cap, init, rev;

  explicit FlowNet(int nodes) : n(nodes), to(nodes), cap(nodes), init(nodes), rev(nodes) {}

  void add(int u, int v, int c) {
    to[u].push_back(v);
    cap[u].push_back(c);
    init[u].push_back(c);
    rev[u].push_back(int(to[v].size()));
    to[v].push_back(u);
    cap[v].push_back(0);
    init[v].push_back(0);
    rev[v].push_back(int(to[u].size()) - 1);
  }

  int flow_on(int u, size_t e) const { return init[u][e] - cap[u][e]; }

  bool augment(int s, int t) {
    std::vector<int> prev_node(n, -1), prev_edge(n, -1);
    std::vector<int> queue{s};
    prev_node[s] = s;
    for (size_t head = 0; head < queue.size() && prev_node[t] == -1; head++) {
      int v = queue[head];
      for (size_t e = 0; e < to[v].size(); e++)
        if (cap[v][e] > 0 && prev_node[to[v][e]] == -1) {
          prev_node[to[v][e]] = v;
          prev_edge[to[v][e]] = int(e);
          queue.push_back(to[v][e]);
        }
    }
    if (prev_node[t] == -1) return false;
    for (int v = t; v != s; v = prev_node[v]) {
      int u = prev_node[v], e = prev_edge[v];
      cap[u][e]--;
      cap[v][rev[u][e]]++;
    }
    return true;
  }

  VertexSet reachable(int s) const {
    VertexSet seen(n);
    seen.set(s);
    std::vector<int> queue{s};
    for (size_t head = 0; head < queue.size(); head++) {
      int v = queue[head];
      for (size_t e = 0; e < to[v].size(); e++)
        if (cap[v][e] > 0 && !seen.test(to[v][e])) {
          seen.set(to[v][e]);
          queue.push_back(to[v][e]);
        }
    }
    return seen;
  }
};

}  // namespace

LinkageResult find_disjoint_linkage(const Graph& g, const std::vector<int>& a_side,
                                    const std::vector<int>& b_side, int k, int budget) {
  if (g.n() > budget) throw budget_error("find_disjoint_linkage: graph exceeds the budget");
  if (k < 1) throw std::invalid_argument("find_disjoint_linkage: k must be positive");
  VertexSet in_a(g.n()), in_b(g.n());
  for (int v : a_side) in_a.set(v);
  for (int v : b_side) in_b.set(v);
  if (in_a.intersects(in_b) || in_a.empty() || in_b.empty())
    throw std::invalid_argument("find_disjoint_linkage: sides must be disjoint and non-empty");

  // nodes: 2v (in) and 2v+1 (out), source, sink; only the vertex arcs carry
  // a finite capacity, so every min cut is a set of vertices
  int src = 2 * g.n(), snk = 2 * g.n() + 1;
  int inf = g.n() + 1;
  FlowNet net(2 * g.n() + 2);
  for (int v = 0; v < g.n(); v++) net.add(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, inf);
    net.add(2 * v + 1, 2 * u, inf);
  }
  for (int v = in_a.first(); v >= 0; v = in_a.next(v)) net.add(src, 2 * v, inf);
  for (int v = in_b.first(); v >= 0; v = in_b.next(v)) net.add(2 * v + 1, snk, inf);

  int flow = 0;
  while (flow < k && net.augment(src, snk)) flow++;

  LinkageResult out;
  if (flow < k) {
    VertexSet reach = net.reachable(src);
    for (int v = 0; v < g.n(); v++)
      if (reach.test(2 * v) && !reach.test(2 * v + 1)) out.cut.push_back(v);
    out.found = false;
    return out;
  }
  out.found = true;
  // strip paths along positive-flow arcs, consuming them as we go
  for (int v = in_a.first(); v >= 0 && int(out.paths.size()) < k; v = in_a.next(v)) {
    bool carries = false;
    for (size_t e = 0; e < net.to[2 * v].size(); e++)
      if (net.flow_on(2 * v, e) > 0) carries = true;
    if (!carries) continue;
    std::vector<int> path{v};
    int cur = v;
    while (!in_b.test(cur)) {
      int out_node = 2 * cur + 1;
      int nxt = -1;
      for (size_t e = 0; e < net.to[out_node].size(); e++) {
        int w = net.to[out_node][e];
        if (w == snk || w % 2 != 0) continue;
        if (net.flow_on(out_node, e) > 0) {
          nxt = w / 2;
          net.cap[out_node][e]++;  // consume one unit
          break;
        }
      }
      if (nxt == -1) throw std::logic_error("find_disjoint_linkage: flow decomposition failed");
      path.push_back(nxt);
      cur = nxt;
    }
    out.paths.push_back(std::move(path));
  }
  if (int(out.paths.size()) != k)
    throw std::logic_error("find_disjoint_linkage: expected k flow-carrying sources");
  return out;
}

int internally_disjoint_paths(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("internally_disjoint_paths: endpoints must differ");
  FlowNet net(2 * g.n());
  for (int w = 0; w < g.n(); w++)
    net.add(2 * w, 2 * w + 1, (w == u || w == v) ? g.n() : 1);
  for (auto [a, b] : g.edges()) {
    net.add(2 * a + 1, 2 * b, 1);
    net.add(2 * b + 1, 2 * a, 1);
  }
  int flow = 0;
  while (net.augment(2 * u + 1, 2 * v)) flow++;
  return flow;
}

GridLikeMinor glm_pipeline(const Graph& g, const std::vector<std::vector<int>>& trunks, int k) {
  if (trunks.size() < 2) throw std::invalid_argument("glm_pipeline: needs at least two trunks");
  PathSystem sys;
  sys.trunks = trunks;
  VertexSet trunk_set(g.n());
  for (const auto& t : trunks)
    for (int v : t) trunk_set.set(v);

  VertexSet consumed(g.n());  // interiors already used by earlier pairs
  for (size_t i = 0; i < trunks.size(); i++) {
    for (size_t j = i + 1; j < trunks.size(); j++) {
      // work inside g minus the other trunks and minus consumed interiors
      std::vector<int> keep;
      std::vector<int> back(g.n(), -1);
      for (int v = 0; v < g.n(); v++) {
        bool other_trunk = trunk_set.test(v) &&
                           std::find(trunks[i].begin(), trunks[i].end(), v) == trunks[i].end() &&
                           std::find(trunks[j].begin(), trunks[j].end(), v) == trunks[j].end();
        if (other_trunk || consumed.test(v)) continue;
        back[v] = int(keep.size());
        keep.push_back(v);
      }
      Graph sub = g.induced(keep);
      std::vector<int> a_sub, b_sub;
      for (int v : trunks[i]) a_sub.push_back(back[v]);
      for (int v : trunks[j]) b_sub.push_back(back[v]);
      LinkageResult link;
      try {
        link = find_disjoint_linkage(sub, a_sub, b_sub, 2 * k, std::max(32, sub.n()));
      } catch (const std::exception&) {
        continue;
      }
      if (!link.found) continue;
      PathSystem::Link entry;
      entry.i = int(i);
      entry.j = int(j);
      for (auto& p : link.paths) {
        std::vector<int> orig;
        for (int v : p) orig.push_back(keep[v]);
        for (size_t q = 1; q + 1 < orig.size(); q++) consumed.set(orig[q]);
        entry.paths.push_back(std::move(orig));
      }
      sys.links.push_back(std::move(entry));
    }
  }
  if (sys.links.empty()) throw std::invalid_argument("glm_pipeline: no linkable trunk pair");

  LiftedPaths lift = lift_linked_paths(g, sys);
  GridLikeMinor out;
  out.paths = lift.trunks;
  // one representative per kept pair, pairwise disjoint
  VertexSet used(lift.cover.base.n());
  for (const auto& linkage : lift.linkages) {
    for (const auto& path : linkage) {
      bool clean = true;
      for (int v : path)
        if (used.test(v)) {
          clean = false;
          break;
        }
      if (!clean) continue;
      for (int v : path) used.set(v);
      out.paths.push_back(path);
      break;
    }
  }
  Graph ig = intersection_graph(out.paths, lift.cover.base.n());
  int best_t = 1;
  MinorModel best_model{{{0}}};
  for (int t = 2; t <= ig.n(); t++) {
    auto m = find_minor(ig, complete_graph(t), std::max(kMinorHostAdvisory, ig.n()));
    if (!m) break;
    best_t = t;
    best_model = *m;
  }
  out.order = best_t;
  out.model = best_model;
  return out;
}

}  // namespace prodwidth
