#include "prodwidth/multipartite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"

namespace prodwidth {

int MultipartitePattern::total() const {
  return overlay + std::accumulate(parts.begin(), parts.end(), 0);
}

void MultipartitePattern::validate() const {
  if (parts.empty()) throw std::invalid_argument("pattern needs at least one part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("pattern parts must be positive");
  if (overlay < 0) throw std::invalid_argument("pattern overlay must be non-negative");
}

bool check_embedding(const Graph& g, const MultipartitePattern& p, const Embedding& e) {
  if (int(e.parts.size()) != p.d()) return false;
  std::vector<int> all;
  for (size_t j = 0; j < e.parts.size(); j++) {
    if (int(e.parts[j].size()) != p.parts[j]) return false;
    all.insert(all.end(), e.parts[j].begin(), e.parts[j].end());
  }
  if (int(e.overlay.size()) != p.overlay) return false;
  all.insert(all.end(), e.overlay.begin(), e.overlay.end());
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : sorted)
    if (v < 0 || v >= g.n()) return false;
  // cross-part completeness; overlay behaves as a part that is also a clique
  auto group_of = [&](int idx) {
    size_t seen = 0;
    for (size_t j = 0; j < e.parts.size(); j++) {
      if (idx < int(seen + e.parts[j].size())) return int(j);
      seen += e.parts[j].size();
    }
    return p.d();  // overlay
  };
  for (size_t i = 0; i < all.size(); i++)
    for (size_t j = i + 1; j < all.size(); j++) {
      int gi = group_of(int(i)), gj = group_of(int(j));
      bool need_edge = gi != gj || gi == p.d();
      if (need_edge && !g.has_edge(all[i], all[j])) return false;
    }
  return true;
}

namespace {

// Backtracking state for the exhaustive pattern search. Slots are filled in
// a fixed order (largest part first, overlay last); vertices inside a part
// ascend, and equal-size parts are forced into ascending first-vertex order
// so interchangeable parts are counted once.
struct OracleSearch {
  const Graph& g;
  std::vector<int> need;        // remaining per slot
  std::vector<int> full_size;   // declared slot sizes
  std::vector<VertexSet> cand;  // feasible vertices per slot
  std::vector<std::vector<int>> chosen;
  int overlay_slot;

  explicit OracleSearch(const Graph& gg, const std::vector<int>& sizes)
      : g(gg),
        need(sizes),
        full_size(sizes),
        cand(sizes.size(), VertexSet::full(gg.n())),
        chosen(sizes.size()),
        overlay_slot(int(sizes.size()) - 1) {}

  bool run() {
    int slot = -1;
    for (size_t j = 0; j < need.size(); j++) {
      if (need[j] == 0) continue;
      int last = chosen[j].empty() ? -1 : chosen[j].back();
      int avail = 0;
      for (int v = cand[j].next(last); v >= 0; v = cand[j].next(v)) avail++;
      if (avail < need[j]) return false;
      if (slot == -1) slot = int(j);
    }
    if (slot == -1) return true;
    int low = chosen[slot].empty() ? -1 : chosen[slot].back();
    if (chosen[slot].empty() && slot > 0 && slot != overlay_slot &&
        full_size[slot - 1] == full_size[slot] && !chosen[slot - 1].empty())
      low = std::max(low, chosen[slot - 1].front());
    for (int v = cand[slot].next(low); v >= 0; v = cand[slot].next(v)) {
      auto saved_cand = cand;
      chosen[slot].push_back(v);
      need[slot]--;
      for (size_t j = 0; j < cand.size(); j++) {
        if (int(j) != slot || slot == overlay_slot) cand[j] &= g.neighbors(v);
        cand[j].reset(v);
      }
      if (run()) return true;
      need[slot]++;
      chosen[slot].pop_back();
      cand = std::move(saved_cand);
    }
    return false;
  }
};

// Zero-size parts are dropped and the rest sorted largest-first (equal sizes
// stay adjacent for the symmetry rule); results map back to input positions.
std::optional<Embedding> oracle_raw(const Graph& g, const std::vector<int>& parts, int overlay) {
  std::vector<int> origin;
  for (size_t j = 0; j < parts.size(); j++)
    if (parts[j] > 0) origin.push_back(int(j));
  std::stable_sort(origin.begin(), origin.end(),
                   [&](int a, int b) { return parts[a] > parts[b]; });
  std::vector<int> sizes;
  for (int j : origin) sizes.push_back(parts[j]);
  sizes.push_back(overlay);
  if (std::accumulate(sizes.begin(), sizes.end(), 0) > g.n()) return std::nullopt;
  OracleSearch search(g, sizes);
  if (!search.run()) return std::nullopt;
  Embedding e;
  e.parts.assign(parts.size(), {});
  for (size_t k = 0; k + 1 < sizes.size(); k++) e.parts[origin[k]] = search.chosen[k];
  e.overlay = search.chosen.back();
  return e;
}

}  // namespace

std::optional<Embedding> oracle_subgraph(const Graph& g, const MultipartitePattern& p,
                                         int budget) {
  p.validate();
  if (g.n() > budget)
    throw budget_error("oracle_subgraph: " + std::to_string(g.n()) +
                       " vertices exceeds the search budget " + std::to_string(budget));
  return oracle_raw(g, p.parts, p.overlay);
}

int clique_number(const Graph& g, int budget) {
  if (g.n() == 0) return 0;
  // greedy clique as a floor, then grow through the oracle
  std::vector<int> greedy;
  VertexSet cand = VertexSet::full(g.n());
  while (!cand.empty()) {
    int v = cand.first();
    greedy.push_back(v);
    cand &= g.neighbors(v);
  }
  int w = int(greedy.size());
  while (w < g.n()) {
    MultipartitePattern p;
    p.parts.assign(w + 1, 1);
    if (!oracle_subgraph(g, p, std::max(budget, g.n()))) break;
    w++;
  }
  return w;
}

// --- cartesian --------------------------------------------------------------

bool check_certificate(const Graph& g1, const Graph& g2, const MultipartitePattern& p,
                       const CartesianCertificate& c) {
  if (const auto* f = std::get_if<InFactorCertificate>(&c)) {
    const Graph& g = f->factor == 1 ? g1 : g2;
    return check_embedding(g, p, f->embedding);
  }
  if (const auto* k = std::get_if<K22Certificate>(&c)) {
    if (p.d() != 2 || p.parts[0] != 2 || p.parts[1] != 2 || p.overlay != 0) return false;
    return g1.has_edge(k->edge1.first, k->edge1.second) &&
           g2.has_edge(k->edge2.first, k->edge2.second);
  }
  const auto& s = std::get<StarCertificate>(c);
  if (p.d() != 2 || p.overlay != 0) return false;
  if (std::min(p.parts[0], p.parts[1]) != 1 || std::max(p.parts[0], p.parts[1]) != s.s)
    return false;
  if (int(s.leaves1.size() + s.leaves2.size()) != s.s) return false;
  for (int b : s.leaves1)
    if (!g1.has_edge(s.center1, b)) return false;
  for (int u : s.leaves2)
    if (!g2.has_edge(s.center2, u)) return false;
  return true;
}

std::optional<CartesianCertificate> decide_cartesian(const Graph& g1, const Graph& g2,
                                                     const MultipartitePattern& p, int budget) {
  p.validate();
  if (p.overlay != 0)
    throw std::invalid_argument("decide_cartesian: overlay patterns are not covered");
  if (p.d() < 2) throw std::invalid_argument("decide_cartesian: needs d >= 2");
  if (g1.n() == 0 || g2.n() == 0)
    throw std::invalid_argument("decide_cartesian: factors must be non-empty");

  if (auto e = oracle_subgraph(g1, p, budget)) return InFactorCertificate{1, *e};
  if (auto e = oracle_subgraph(g2, p, budget)) return InFactorCertificate{2, *e};

  if (p.d() == 2 && p.parts[0] == 2 && p.parts[1] == 2) {
    if (g1.m() > 0 && g2.m() > 0) return K22Certificate{g1.edges()[0], g2.edges()[0]};
    return std::nullopt;
  }
  if (p.d() == 2 && std::min(p.parts[0], p.parts[1]) == 1) {
    int s = std::max(p.parts[0], p.parts[1]);
    int d1 = g1.max_degree(), d2 = g2.max_degree();
    if (d1 + d2 < s) return std::nullopt;
    StarCertificate cert;
    cert.s = s;
    for (int v = 0; v < g1.n(); v++)
      if (g1.degree(v) == d1) {
        cert.center1 = v;
        break;
      }
    for (int v = 0; v < g2.n(); v++)
      if (g2.degree(v) == d2) {
        cert.center2 = v;
        break;
      }
    int from1 = std::min(s, d1);
    const VertexSet& n1 = g1.neighbors(cert.center1);
    for (int b = n1.first(); b >= 0 && int(cert.leaves1.size()) < from1; b = n1.next(b))
      cert.leaves1.push_back(b);
    const VertexSet& n2 = g2.neighbors(cert.center2);
    for (int u = n2.first(); u >= 0 && int(cert.leaves2.size()) < s - from1; u = n2.next(u))
      cert.leaves2.push_back(u);
    return cert;
  }
  return std::nullopt;
}

// --- direct -----------------------------------------------------------------

bool check_certificate(const Graph& g1, const Graph& g2, const MultipartitePattern& p,
                       const DirectCertificate& c) {
  if (int(c.a.size()) != p.d() || int(c.b.size()) != p.d()) return false;
  for (int j = 0; j < p.d(); j++) {
    if (c.a[j] < 1 || c.b[j] < 1) return false;
    if ((long long)c.a[j] * c.b[j] < p.parts[j]) return false;
  }
  MultipartitePattern pa{c.a, 0}, pb{c.b, 0};
  return check_embedding(g1, pa, c.in_g1) && check_embedding(g2, pb, c.in_g2);
}

std::optional<DirectCertificate> decide_direct(const Graph& g1, const Graph& g2,
                                               const MultipartitePattern& p, int budget) {
  p.validate();
  if (p.overlay != 0)
    throw std::invalid_argument("decide_direct: overlay patterns are not covered");
  if (p.d() < 2) throw std::invalid_argument("decide_direct: needs d >= 2");
  if (g1.m() == 0 || g2.m() == 0)
    throw std::invalid_argument("decide_direct: factors must have non-empty edge sets");

  if (g1.n() > budget || g2.n() > budget)
    throw budget_error("decide_direct: factor exceeds the search budget");

  int d = p.d();
  std::map<std::vector<int>, bool> memo1, memo2;
  auto feasible = [&](const Graph& g, const std::vector<int>& parts,
                      std::map<std::vector<int>, bool>& memo) {
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
    bool ok = oracle_raw(g, parts, 0).has_value();
    memo.emplace(parts, ok);
    return ok;
  };

  std::vector<int> a(d, 1);
  while (true) {
    std::vector<int> b(d);
    bool b_ok = true;
    for (int j = 0; j < d && b_ok; j++) {
      b[j] = (p.parts[j] + a[j] - 1) / a[j];
      if (b[j] > g2.n()) b_ok = false;
    }
    if (b_ok && feasible(g1, a, memo1) && feasible(g2, b, memo2)) {
      DirectCertificate cert;
      cert.a = a;
      cert.b = b;
      cert.in_g1 = *oracle_raw(g1, a, 0);
      cert.in_g2 = *oracle_raw(g2, b, 0);
      return cert;
    }
    int j = d - 1;
    while (j >= 0 && a[j] == std::min(p.parts[j], g1.n())) {
      a[j] = 1;
      j--;
    }
    if (j < 0) break;
    a[j]++;
  }
  return std::nullopt;
}

// --- strong -----------------------------------------------------------------

bool check_certificate(const Graph& g1, const Graph& g2, const MultipartitePattern& p,
                       const StrongCertificate& c) {
  int d = p.d();
  if (int(c.a.size()) != d || int(c.b.size()) != d || int(c.z.size()) != d) return false;
  if (c.x < 0 || c.y < 0) return false;
  long long zsum = 0;
  for (int j = 0; j < d; j++) {
    if (c.a[j] < 0 || c.b[j] < 0 || c.z[j] < 0) return false;
    long long cover = (long long)c.a[j] * c.b[j] + (long long)c.a[j] * c.y +
                      (long long)c.b[j] * c.x + c.z[j];
    if (p.parts[j] > cover) return false;
    zsum += c.z[j];
  }
  if (zsum > (long long)c.x * c.y) return false;
  // embeddings carry the zero parts as empty lists
  auto check_overlayed = [&](const Graph& g, const std::vector<int>& parts, int overlay,
                             const Embedding& e) {
    if (int(e.parts.size()) != int(parts.size())) return false;
    std::vector<int> nz_parts;
    Embedding nz;
    for (size_t j = 0; j < parts.size(); j++) {
      if (int(e.parts[j].size()) != parts[j]) return false;
      if (parts[j] > 0) {
        nz_parts.push_back(parts[j]);
        nz.parts.push_back(e.parts[j]);
      }
    }
    nz.overlay = e.overlay;
    if (nz_parts.empty()) {  // pure clique: verify the overlay directly
      if (int(e.overlay.size()) != overlay) return false;
      for (int v : e.overlay)
        if (v < 0 || v >= g.n()) return false;
      for (size_t i = 0; i < e.overlay.size(); i++)
        for (size_t j = i + 1; j < e.overlay.size(); j++)
          if (e.overlay[i] == e.overlay[j] || !g.has_edge(e.overlay[i], e.overlay[j]))
            return false;
      return true;
    }
    MultipartitePattern q{nz_parts, overlay};
    return check_embedding(g, q, nz);
  };
  return check_overlayed(g1, c.a, c.x, c.in_g1) && check_overlayed(g2, c.b, c.y, c.in_g2);
}

std::optional<StrongCertificate> decide_strong(const Graph& g1, const Graph& g2,
                                               const MultipartitePattern& p, int budget) {
  p.validate();
  if (p.overlay != 0)
    throw std::invalid_argument("decide_strong: overlay patterns are not covered");
  if (p.d() < 2) throw std::invalid_argument("decide_strong: needs d >= 2");
  if (g1.n() > budget || g2.n() > budget)
    throw budget_error("decide_strong: factor exceeds the search budget");

  int d = p.d();
  std::map<std::pair<std::vector<int>, int>, std::optional<Embedding>> memo1, memo2;
  auto feasible = [](const Graph& g, const std::vector<int>& parts, int overlay,
                     std::map<std::pair<std::vector<int>, int>, std::optional<Embedding>>& memo)
      -> const std::optional<Embedding>& {
    auto key = std::make_pair(parts, overlay);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, oracle_raw(g, parts, overlay)).first;
    return it->second;
  };

  // candidate part vectors, lexicographic
  auto enumerate_vectors = [&](int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(d, 0);
    while (true) {
      out.push_back(v);
      int j = d - 1;
      while (j >= 0 && v[j] == std::min(p.parts[j], cap)) v[j--] = 0;
      if (j < 0) break;
      v[j]++;
    }
    return out;
  };
  std::vector<std::vector<int>> avecs = enumerate_vectors(g1.n());
  std::vector<std::vector<int>> bvecs = enumerate_vectors(g2.n());

  int xmax = g1.n(), ymax = g2.n();
  for (int xy = 0; xy <= xmax + ymax; xy++) {
    for (int x = std::max(0, xy - ymax); x <= std::min(xy, xmax); x++) {
      int y = xy - x;
      for (const auto& a : avecs) {
        if (!feasible(g1, a, x, memo1)) continue;
        for (const auto& b : bvecs) {
          std::vector<int> z(d);
          long long zsum = 0;
          for (int j = 0; j < d; j++) {
            long long cover = (long long)a[j] * b[j] + (long long)a[j] * y + (long long)b[j] * x;
            z[j] = int(std::max(0LL, p.parts[j] - cover));
            zsum += z[j];
          }
          if (zsum > (long long)x * y) continue;
          const auto& e2 = feasible(g2, b, y, memo2);
          if (!e2) continue;
          StrongCertificate cert;
          cert.a = a;
          cert.b = b;
          cert.z = z;
          cert.x = x;
          cert.y = y;
          cert.in_g1 = *feasible(g1, a, x, memo1);
          cert.in_g2 = *e2;
          return cert;
        }
      }
    }
  }
  return std::nullopt;
}

KstBoundResult strong_kst_bound(int s, int t, int max_degree, int witness_n) {
  if (s < 1 || t < s || max_degree < 1)
    throw std::invalid_argument("strong_kst_bound: requires t >= s >= 1 and Delta >= 1");
  KstBoundResult r;
  r.forbidden = {(s - 1) * (max_degree + 1) + 1, (s + t) * (max_degree + 1)};
  r.witness_pattern = {(s - 1) * (max_degree + 1), witness_n};
  if (s >= 2 && witness_n >= 1) {
    Graph gt = complete_multipartite({s - 2, witness_n}, 1);
    Graph ht = complete_multipartite({max_degree, 0}, 1);
    r.witness = std::make_pair(gt, ht);
  }
  return r;
}

}  // namespace prodwidth
