#include "prodwidth/lowerbounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"

namespace prodwidth {

std::vector<std::string> validate_bramble(const Graph& g, const Bramble& b) {
  std::vector<std::string> out;
  std::vector<VertexSet> sets;
  for (size_t i = 0; i < b.elements.size(); i++) {
    VertexSet s(g.n());
    for (int v : b.elements[i]) {
      if (v < 0 || v >= g.n()) {
        out.push_back("element " + std::to_string(i) + " references an invalid vertex");
        return out;
      }
      s.set(v);
    }
    if (!is_connected_set(g, s))
      out.push_back("element " + std::to_string(i) + " is empty or disconnected");
    sets.push_back(std::move(s));
  }
  for (size_t i = 0; i < sets.size(); i++)
    for (size_t j = i + 1; j < sets.size(); j++) {
      if (sets[i].intersects(sets[j])) continue;
      bool touch = false;
      for (int v = sets[i].first(); v >= 0 && !touch; v = sets[i].next(v))
        touch = g.neighbors(v).intersects(sets[j]);
      if (!touch)
        out.push_back("elements " + std::to_string(i) + " and " + std::to_string(j) +
                      " do not touch");
    }
  return out;
}

namespace {

struct HittingSearch {
  const std::vector<VertexSet>& elements;
  int n;
  std::vector<int> best;
  std::vector<int> current;

  // greedy count of pairwise-disjoint unhit elements: each needs its own vertex
  int lower_bound(const VertexSet& hit_by) const {
    VertexSet blocked(n);
    int lb = 0;
    for (const auto& e : elements) {
      if (e.intersects(hit_by)) continue;
      if (e.intersects(blocked)) continue;
      blocked |= e;
      lb++;
    }
    return lb;
  }

  void run(VertexSet hit_by) {
    int pick = -1, pick_size = n + 1;
    for (size_t i = 0; i < elements.size(); i++) {
      if (elements[i].intersects(hit_by)) continue;
      int sz = elements[i].count();
      if (sz < pick_size) {
        pick = int(i);
        pick_size = sz;
      }
    }
    if (pick == -1) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty() && int(current.size()) + lower_bound(hit_by) >= int(best.size())) return;
    for (int v = elements[pick].first(); v >= 0; v = elements[pick].next(v)) {
      current.push_back(v);
      VertexSet next = hit_by;
      next.set(v);
      run(next);
      current.pop_back();
    }
  }
};

}  // namespace

BrambleOrder bramble_order(const Graph& g, const Bramble& b, bool force) {
  if (!force && (int(b.elements.size()) > kBrambleAdvisory || g.n() > kBrambleAdvisory))
    throw budget_error("bramble_order: instance exceeds the advisory; pass force");
  if (b.elements.empty()) return {0, {}};
  for (const auto& e : b.elements)
    if (e.empty()) throw std::invalid_argument("bramble_order: empty element");

  if (g.n() <= 14) {  // whole-universe sweep beats branching at this size
    std::vector<uint32_t> masks;
    for (const auto& e : b.elements) {
      uint32_t m = 0;
      for (int v : e) m |= uint32_t(1) << v;
      masks.push_back(m);
    }
    uint32_t best = (uint32_t(1) << g.n()) - 1;
    for (uint32_t mask = 0; mask < (uint32_t(1) << g.n()); mask++) {
      if (std::popcount(mask) >= std::popcount(best)) continue;
      bool hits = true;
      for (uint32_t em : masks)
        if (!(em & mask)) {
          hits = false;
          break;
        }
      if (hits) best = mask;
    }
    std::vector<int> hitting;
    for (int v = 0; v < g.n(); v++)
      if ((best >> v) & 1) hitting.push_back(v);
    return {int(hitting.size()), hitting};
  }

  std::vector<VertexSet> sets;
  for (const auto& e : b.elements) {
    VertexSet s(g.n());
    for (int v : e) s.set(v);
    sets.push_back(std::move(s));
  }
  HittingSearch search{sets, g.n(), {}, {}};
  for (int v = 0; v < g.n(); v++) search.best.push_back(v);  // trivial hitting set
  search.run(VertexSet(g.n()));
  std::sort(search.best.begin(), search.best.end());
  return {int(search.best.size()), search.best};
}

Bramble grid_bramble(int l) {
  if (l < 1) throw std::invalid_argument("grid_bramble: l must be positive");
  Bramble b;
  auto id = [l](int r, int c) { return r * l + c; };
  for (int r = 0; r < l; r++)
    for (int c = 0; c < l; c++) {
      std::vector<int> cross;
      for (int x = 0; x < l; x++) cross.push_back(id(r, x));
      for (int x = 0; x < l; x++)
        if (x != r) cross.push_back(id(x, c));
      std::sort(cross.begin(), cross.end());
      b.elements.push_back(std::move(cross));
    }
  return b;
}

Bramble product_bramble(const Graph& g, const Bramble& gb, const Graph& h,
                        const MinorModel& h_clique_model) {
  auto berrs = validate_bramble(g, gb);
  if (!berrs.empty())
    throw std::invalid_argument("product_bramble: input bramble invalid: " + berrs.front());
  int t = int(h_clique_model.branch_sets.size());
  auto merrs = validate_model(h, complete_graph(t), h_clique_model);
  if (!merrs.empty())
    throw std::invalid_argument("product_bramble: clique model invalid: " + merrs.front());
  Bramble out;
  for (const auto& x : gb.elements)
    for (int i = 0; i < t; i++) {
      std::vector<int> elem;
      for (int v : x)
        for (int u : h_clique_model.branch_sets[i]) elem.push_back(v * h.n() + u);
      std::sort(elem.begin(), elem.end());
      out.elements.push_back(std::move(elem));
    }
  return out;
}

namespace {

// Maximal pairwise-touching families of connected sets, reported through a
// callback; Bron-Kerbosch with greedy pivoting on the touching graph.
struct BrambleEnum {
  const std::vector<VertexSet>& cand_sets;
  std::vector<VertexSet> touch;  // adjacency over candidate indices
  long long budget = 4'000'000;
  std::function<void(const VertexSet&)> report;

  void bk(VertexSet r, VertexSet p, VertexSet x) {
    if (--budget < 0) throw budget_error("optimal_bramble: family enumeration budget exhausted");
    if (p.empty() && x.empty()) {
      report(r);
      return;
    }
    int pivot = -1, best = -1;
    VertexSet p_or_x = p | x;
    for (int u = p_or_x.first(); u >= 0; u = p_or_x.next(u)) {
      int cnt = (touch[u] & p).count();
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    VertexSet ext = p;
    if (pivot >= 0) ext.subtract(touch[pivot]);
    for (int v = ext.first(); v >= 0; v = ext.next(v)) {
      VertexSet r2 = r;
      r2.set(v);
      bk(r2, p & touch[v], x & touch[v]);
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

Bramble optimal_bramble(const Graph& g, int budget) {
  if (g.n() > budget) throw budget_error("optimal_bramble: graph exceeds the budget");
  if (g.n() == 0) return {};
  // complete graphs: the singletons already form a maximum-order bramble
  if (g.m() == g.n() * (g.n() - 1) / 2) {
    Bramble b;
    for (int v = 0; v < g.n(); v++) b.elements.push_back({v});
    return b;
  }

  // all connected vertex sets
  std::vector<VertexSet> conn;
  for (uint32_t mask = 1; mask < (uint32_t(1) << g.n()); mask++) {
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); v++)
      if ((mask >> v) & 1) s.set(v);
    if (is_connected_set(g, s)) conn.push_back(std::move(s));
  }
  int m = int(conn.size());
  std::vector<VertexSet> nbhd;
  for (const auto& s : conn) {
    VertexSet nb = s;
    for (int v = s.first(); v >= 0; v = s.next(v)) nb |= g.neighbors(v);
    nbhd.push_back(std::move(nb));
  }
  BrambleEnum en{conn, {}, 4'000'000, nullptr};
  en.touch.assign(m, VertexSet(m));
  for (int i = 0; i < m; i++)
    for (int j = i + 1; j < m; j++)
      if (nbhd[i].intersects(conn[j])) {
        en.touch[i].set(j);
        en.touch[j].set(i);
      }

  Bramble best;
  int best_order = -1;
  en.report = [&](const VertexSet& family) {
    if (family.count() <= best_order) return;  // order cannot exceed the family size
    Bramble b;
    for (int i = family.first(); i >= 0; i = family.next(i))
      b.elements.push_back(conn[i].to_vector());
    int order = bramble_order(g, b, true).order;
    if (order > best_order) {
      best_order = order;
      best = std::move(b);
    }
  };
  en.bk(VertexSet(m), VertexSet::full(m), VertexSet(m));
  return best;
}

namespace {

struct SeparationSearch {
  const Graph& g;
  int cap;  // max side size
  int best;
  std::vector<int> assign;  // 0=A,1=S,2=B, -1 pending
  std::vector<int> best_assign;
  int count_a = 0, count_b = 0, count_s = 0;
  bool placed_first_side = false;

  explicit SeparationSearch(const Graph& gg, int c)
      : g(gg), cap(c), best(gg.n() + 1), assign(gg.n(), -1) {}

  void run(int v) {
    if (count_s >= best) return;
    if (v == g.n()) {
      if (count_a >= 1 && count_b >= 1 && count_s < best) {
        best = count_s;
        best_assign = assign;
      }
      return;
    }
    // remaining vertices can still fill A/B; prune when a side cannot reach 1
    int remaining = g.n() - v;
    if (count_a == 0 && count_b == 0 && remaining < 2) return;
    if ((count_a == 0 || count_b == 0) && remaining < 1) return;

    bool can_a = count_a < cap, can_b = count_b < cap;
    for (int u = g.neighbors(v).first(); u >= 0 && u < v; u = g.neighbors(v).next(u)) {
      if (assign[u] == 2) can_a = false;
      if (assign[u] == 0) can_b = false;
    }
    // symmetry: the first side vertex goes to A
    if (can_a) {
      assign[v] = 0;
      count_a++;
      run(v + 1);
      count_a--;
    }
    if (can_b && count_a + count_b > 0) {  // the very first side vertex goes to A
      assign[v] = 2;
      count_b++;
      run(v + 1);
      count_b--;
    }
    assign[v] = 1;
    count_s++;
    run(v + 1);
    count_s--;
    assign[v] = -1;
  }
};

}  // namespace

std::optional<std::pair<int, Separation>> min_separation_order(const Graph& g, Rat eps,
                                                               int budget) {
  if (g.n() > budget) throw budget_error("min_separation_order: graph exceeds the budget");
  if (!(Rat(2, 3) <= eps && eps < Rat(1)))
    throw std::invalid_argument("min_separation_order: epsilon must lie in [2/3, 1)");
  if (g.n() < 2) return std::nullopt;
  long long capll = (eps * Rat(g.n())).floor();
  int cap = int(std::min<long long>(capll, g.n()));
  SeparationSearch search(g, cap);
  search.run(0);
  if (search.best > g.n()) return std::nullopt;
  Separation sep;
  for (int v = 0; v < g.n(); v++) {
    if (search.best_assign[v] == 0) sep.a.push_back(v);
    else if (search.best_assign[v] == 1) sep.s.push_back(v);
    else sep.b.push_back(v);
  }
  return std::make_pair(search.best, sep);
}

Rat connectivity_lower_formula(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("connectivity_lower_formula: k and n must be positive");
  return Rat((long long)k * (n - 2 * k + 2) - 1);
}

Rat separation_lower_formula(Rat eps, Rat beta, int k, int n, int m) {
  if (!(Rat(2, 3) <= eps)) throw std::invalid_argument("hypothesis failed: eps >= 2/3");
  if (!(eps < beta)) throw std::invalid_argument("hypothesis failed: beta > eps");
  if (!(beta < Rat(1))) throw std::invalid_argument("hypothesis failed: beta < 1");
  if (k < 1 || n < 1 || m < 1)
    throw std::invalid_argument("hypothesis failed: k, n, m >= 1");
  if (m < (long long)k * n) throw std::invalid_argument("hypothesis failed: m >= k n");
  if (Rat(n) < Rat(1) / (Rat(1) - beta))
    throw std::invalid_argument("hypothesis failed: n >= 1/(1-beta)");
  return (Rat(1) - eps / beta) * Rat(k) * Rat(n) - Rat(1);
}

long long moore_bound(int max_degree, int diam) {
  if (max_degree <= 1) throw std::invalid_argument("moore_bound: requires max degree > 1");
  if (diam < 0) throw std::invalid_argument("moore_bound: diameter must be non-negative");
  if (max_degree == 2) return 2LL * diam + 1;
  long long pw = 1;
  for (int i = 0; i < diam; i++) pw *= (max_degree - 1);
  return 1 + (long long)max_degree * (pw - 1) / (max_degree - 2);
}

std::vector<std::pair<std::string, Rat>> formula_lower_bounds(const FormulaQuery& q) {
  std::vector<std::pair<std::string, Rat>> out;
  if (q.connectivity)
    out.emplace_back("connectivity",
                     connectivity_lower_formula(q.connectivity->first, q.connectivity->second));
  if (q.separation) {
    auto [eps, beta, k, n, m] = *q.separation;
    out.emplace_back("separation", separation_lower_formula(eps, beta, k, n, m));
  }
  if (q.moore)
    out.emplace_back("moore", Rat(moore_bound(q.moore->first, q.moore->second)));
  return out;
}

SeparationLemmaReport verify_separation_lemma(const Graph& g, const Graph& h, Rat eps, Rat beta,
                                              int k, int budget) {
  SeparationLemmaReport rep;
  int m = g.n(), n = h.n();
  rep.hypotheses.emplace_back("g connected", is_connected(g) && m >= 1);
  rep.hypotheses.emplace_back("h connected", is_connected(h) && n >= 1);
  rep.hypotheses.emplace_back("2/3 <= eps < beta < 1",
                              Rat(2, 3) <= eps && eps < beta && beta < Rat(1));
  rep.hypotheses.emplace_back("m >= k n", (long long)m >= (long long)k * n);
  rep.hypotheses.emplace_back("n >= 1/(1-beta)", Rat(n) >= Rat(1) / (Rat(1) - beta));
  bool beta_ok = true;
  if (m >= 2 && Rat(2, 3) <= beta && beta < Rat(1)) {
    auto min_beta = min_separation_order(g, beta, budget);
    beta_ok = !min_beta || min_beta->first >= k;
  }
  rep.hypotheses.emplace_back("every beta-separation of g has order >= k", beta_ok);
  rep.hypotheses_ok = true;
  for (auto& [name, ok] : rep.hypotheses) rep.hypotheses_ok &= ok;

  rep.bound = (Rat(1) - eps / beta) * Rat(k) * Rat(n);
  ProductGraph p = product(g, h, ProductKind::Cartesian);
  auto min_eps = min_separation_order(p.base, eps, budget);
  if (min_eps) rep.product_min_order = min_eps->first;
  rep.inequality_holds = !min_eps || Rat(min_eps->first) >= rep.bound;
  return rep;
}

int vertex_connectivity(const Graph& g) {
  int n = g.n();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.m() == n * (n - 1) / 2) return n - 1;
  int best = n;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (g.has_edge(u, v)) continue;
      best = std::min(best, internally_disjoint_paths(g, u, v));
    }
  return best;
}

Rat BoundReport::best_lower() const {
  Rat best = -1;
  for (const auto& e : entries)
    if (!e.upper && best < e.value) best = e.value;
  return best;
}

std::optional<Rat> BoundReport::best_upper() const {
  std::optional<Rat> best;
  for (const auto& e : entries)
    if (e.upper && (!best || e.value < *best)) best = e.value;
  return best;
}

BoundReport bound_engine(const Graph& g1, const Graph& g2, ProductKind kind, ExactMode exact) {
  BoundReport rep;
  if (g1.n() == 0 || g2.n() == 0)
    throw std::invalid_argument("bound_engine: factors must be non-empty");

  struct Side {
    const Graph* a;
    const Graph* b;
    std::string tag;
  };
  Side sides[2] = {{&g1, &g2, "g1,g2"}, {&g2, &g1, "g2,g1"}};

  WidthResult tw1 = exact_width(g1, WidthKind::Tree);
  WidthResult tw2 = exact_width(g2, WidthKind::Tree);
  const WidthResult* tw[2] = {&tw1, &tw2};

  for (int s = 0; s < 2; s++) {
    const Graph& a = *sides[s].a;
    const Graph& b = *sides[s].b;
    const WidthResult& wa = *tw[s == 0 ? 0 : 1];

    // (tw(a)+1) v(b) - 1 upper with a lifted decomposition
    BoundEntry lift;
    lift.name = "lift(" + sides[s].tag + ")";
    lift.rule = "lift";
    lift.upper = true;
    lift.value = Rat((long long)(wa.value + 1) * b.n() - 1);
    HDecomposition lifted = lift_product(a, wa.decomposition, b);
    if (s == 1) {  // bags are pairs (a-vertex, b-vertex); remap to (g1, g2) ids
      for (auto& bag : lifted.bags) {
        for (int& id : bag) {
          int av = id / b.n(), bv = id % b.n();
          id = bv * a.n() + av;
        }
        std::sort(bag.begin(), bag.end());
      }
    }
    lift.certificate = std::move(lifted);
    rep.entries.push_back(std::move(lift));

    if (kind == ProductKind::Direct) {
      if (!is_connected(a) || !is_connected(b)) {
        rep.skipped.push_back("cover-subdivision(" + sides[s].tag +
                              "): requires connected factors");
      } else {
        std::vector<int> cover;
        int tau = vertex_cover_number(a, &cover, std::max(16, a.n()));
        const WidthResult& wb = *tw[s == 0 ? 1 : 0];
        BoundEntry e;
        e.name = "cover-subdivision(" + sides[s].tag + ")";
        e.rule = "cover-subdivision";
        e.upper = true;
        e.value = Rat((long long)tau * (wb.value + 1) * (b.max_degree() + 1));
        HDecomposition dec = vc_subdivision_decomp(a, cover, b, wb.decomposition);
        if (s == 1) {
          for (auto& bag : dec.bags) {
            for (int& id : bag) {
              int av = id / b.n(), bv = id % b.n();
              id = bv * a.n() + av;
            }
            std::sort(bag.begin(), bag.end());
          }
        }
        e.certificate = std::move(dec);
        rep.entries.push_back(std::move(e));
      }
    }

    if (kind == ProductKind::Strong) {
      // eta(b) (tw(a)+1) - 1 with a product bramble when sizes permit
      if (b.n() <= kMinorHostAdvisory) {
        MinorModel model;
        int eta = hadwiger_number(b, &model);
        BoundEntry e;
        e.name = "hadwiger(" + sides[s].tag + ")";
        e.rule = "hadwiger";
        e.upper = false;
        e.value = Rat((long long)eta * (wa.value + 1) - 1);
        if (a.n() <= 7 && s == 0) {
          Bramble ab = optimal_bramble(a);
          e.certificate = product_bramble(a, ab, b, model);
        }
        rep.entries.push_back(std::move(e));
      } else {
        rep.skipped.push_back("hadwiger(" + sides[s].tag + "): factor too large");
      }
    }

    if (kind == ProductKind::Direct) {
      if (!bipartition(b)) {
        BoundEntry e;
        e.name = "nonbipartite-factor(" + sides[s].tag + ")";
        e.rule = "nonbipartite-factor";
        e.upper = false;
        e.value = Rat(wa.value);
        if ((long long)a.n() * b.n() <= kMinorHostAdvisory && a.n() <= kMinorPatternAdvisory) {
          ProductGraph p = product(g1, g2, kind);
          auto m = find_minor(p.base, a);
          if (m) e.certificate = *m;
        }
        rep.entries.push_back(std::move(e));
      } else {
        rep.skipped.push_back("nonbipartite-factor(" + sides[s].tag + "): factor is bipartite");
      }
    }
  }

  if (kind != ProductKind::Direct) {
    // factor containment lower
    BoundEntry e;
    e.name = "factor";
    e.rule = "factor";
    e.upper = false;
    e.value = Rat(std::max(tw1.value, tw2.value));
    rep.entries.push_back(std::move(e));

    int kappa = std::min(vertex_connectivity(g1), vertex_connectivity(g2));
    int nmin = std::min(g1.n(), g2.n());
    if (kappa >= 1) {
      Rat best = -1;
      for (int k = 1; k <= kappa; k++) {
        Rat v = connectivity_lower_formula(k, nmin);
        if (best < v) best = v;
      }
      BoundEntry c;
      c.name = "connectivity";
      c.rule = "connectivity";
      c.upper = false;
      c.value = best;
      rep.entries.push_back(std::move(c));
    } else {
      rep.skipped.push_back("connectivity: a factor is disconnected or trivial");
    }

    // separation-based lower with the default eps = 2/3, beta = 3/4
    Rat eps(2, 3), beta(3, 4);
    bool tried = false;
    for (int s = 0; s < 2 && !tried; s++) {
      const Graph& a = *sides[s].a;
      const Graph& b = *sides[s].b;
      if (!is_connected(a) || !is_connected(b)) continue;
      if (Rat(b.n()) < Rat(1) / (Rat(1) - beta)) continue;
      if (a.n() > kSeparationAdvisory) continue;
      auto msep = min_separation_order(a, beta, kSeparationAdvisory);
      int k = msep ? msep->first : a.n();
      if (k < 1 || (long long)a.n() < (long long)k * b.n()) continue;
      tried = true;
      BoundEntry e;
      e.name = "separation(" + sides[s].tag + ")";
      e.rule = "separation";
      e.upper = false;
      e.value = separation_lower_formula(eps, beta, k, b.n(), a.n());
      rep.entries.push_back(std::move(e));
    }
    if (!tried) rep.skipped.push_back("separation: hypotheses not met at this scale");
  }

  long long pn = (long long)g1.n() * g2.n();
  if (exact == ExactMode::Force || (exact == ExactMode::Auto && pn <= kTreewidthAdvisory)) {
    ProductGraph p = product(g1, g2, kind);
    rep.exact = exact_width(p.base, WidthKind::Tree, exact == ExactMode::Force ? 25 : -1).value;
  }

  // report invariants
  auto up = rep.best_upper();
  for (const auto& e : rep.entries) {
    if (e.upper || !up) continue;
    if (*up < e.value)
      throw std::logic_error("bound_engine: lower entry " + e.name + " exceeds an upper entry");
  }
  if (rep.exact) {
    if (Rat(*rep.exact) < rep.best_lower() || (up && Rat(*rep.exact) > *up))
      throw std::logic_error("bound_engine: exact width escapes the bound interval");
  }
  return rep;
}

}  // namespace prodwidth
