// Acceptance suite: every criterion is exact (tolerance zero) and prints one
// PASS/FAIL line. The process exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "prodwidth/catalog.hpp"
#include "prodwidth/classify.hpp"
#include "prodwidth/cli.hpp"
#include "prodwidth/codec.hpp"
#include "prodwidth/decomp.hpp"
#include "prodwidth/degeneracy.hpp"
#include "prodwidth/families.hpp"
#include "prodwidth/lowerbounds.hpp"
#include "prodwidth/minors.hpp"
#include "prodwidth/multipartite.hpp"

using namespace prodwidth;

namespace {

int failures = 0;

struct Criterion {
  std::string detail;
  long long instances = 0;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    instances++;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

void report(int number, const std::string& name, Criterion& c, double seconds) {
  if (c.ok) {
    printf("PASS criterion %d: %s (%lld instances, %.1fs)\n", number, name.c_str(),
           c.instances, seconds);
  } else {
    printf("FAIL criterion %d: %s -- %s\n", number, name.c_str(), c.detail.c_str());
    failures++;
  }
  fflush(stdout);
}

template <typename F>
void run_criterion(int number, const std::string& name, F body) {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  body(c);
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, name, c, dt);
}

std::vector<std::vector<int>> patterns_with_total_up_to(int total) {
  std::vector<std::vector<int>> out;
  for (int t = 2; t <= total; t++) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
      if (left == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
      }
      for (int p = std::min(left, cap); p >= 1; p--) {
        cur.push_back(p);
        rec(left - p, p);
        cur.pop_back();
      }
    };
    rec(t, t);
  }
  return out;
}

std::string pair_tag(const Graph& a, const Graph& b) {
  return graph6_encode(a) + " " + graph6_encode(b);
}

int tw(const Graph& g, int budget = -1) { return exact_width(g, WidthKind::Tree, budget).value; }

// ---------------------------------------------------------------------------

void criterion1(Criterion& c) {
  auto corpus = all_graphs_upto(4);
  auto patterns = patterns_with_total_up_to(5);
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      for (const auto& parts : patterns) {
        MultipartitePattern p{parts, 0};
        {
          bool expected =
              oracle_subgraph(product(a, b, ProductKind::Cartesian).base, p, 16).has_value();
          bool got = decide_cartesian(a, b, p).has_value();
          c.require(got == expected, "cartesian disagreement at " + pair_tag(a, b));
        }
        {
          bool expected =
              oracle_subgraph(product(a, b, ProductKind::Strong).base, p, 16).has_value();
          bool got = decide_strong(a, b, p).has_value();
          c.require(got == expected, "strong disagreement at " + pair_tag(a, b));
        }
        if (a.m() > 0 && b.m() > 0) {
          bool expected =
              oracle_subgraph(product(a, b, ProductKind::Direct).base, p, 16).has_value();
          bool got = decide_direct(a, b, p).has_value();
          c.require(got == expected, "direct disagreement at " + pair_tag(a, b));
        }
      }
}

void criterion2(Criterion& c) {
  auto corpus = all_graphs_upto(5);
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      int prod = clique_number(product(a, b, ProductKind::Strong).base);
      c.require(prod == clique_number(a) * clique_number(b),
                "clique law fails at " + pair_tag(a, b));
    }
}

void criterion3(Criterion& c) {
  auto corpus = all_graphs_upto(5);
  // (a) cartesian additivity
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      int lhs = degeneracy_exact(product(a, b, ProductKind::Cartesian).base).degeneracy;
      int rhs = degeneracy_exact(a).degeneracy + degeneracy_exact(b).degeneracy;
      c.require(lhs == rhs, "additivity fails at " + pair_tag(a, b));
    }
  // (b) complete bipartite direct products
  for (int s1 = 1; s1 <= 4; s1++)
    for (int t1 = s1; t1 <= 4; t1++)
      for (int s2 = 1; s2 <= 4; s2++)
        for (int t2 = s2; t2 <= 4; t2++) {
          auto p = product(complete_multipartite({s1, t1}), complete_multipartite({s2, t2}),
                           ProductKind::Direct);
          c.require(degeneracy_exact(p.base).degeneracy == std::min(s1 * t2, s2 * t1),
                    "K_{s,t} direct formula fails");
        }
  // (c) sandwich with honest stats
  std::vector<std::vector<FactorStats>> stats;
  for (const auto& g : corpus) {
    std::vector<FactorStats> fs;
    for (auto st : bipartite_pairs(g, std::max(12, g.n()))) fs.push_back(stats_with_pair(g, st));
    stats.push_back(fs);
  }
  for (size_t i = 0; i < corpus.size(); i++) {
    if (stats[i].empty()) continue;
    for (size_t j = 0; j < corpus.size(); j++) {
      if (stats[j].empty()) continue;
      int dd = degeneracy_exact(product(corpus[i], corpus[j], ProductKind::Direct).base)
                   .degeneracy;
      int ds = degeneracy_exact(product(corpus[i], corpus[j], ProductKind::Strong).base)
                   .degeneracy;
      for (const auto& f1 : stats[i])
        for (const auto& f2 : stats[j]) {
          auto [lo, hi] = bounds_direct(f1, f2);
          c.require(lo <= dd && dd <= hi,
                    "direct sandwich fails at " + pair_tag(corpus[i], corpus[j]));
          auto [lo2, hi2] = bounds_strong(f1, f2);
          c.require(lo2 <= ds && ds <= hi2,
                    "strong sandwich fails at " + pair_tag(corpus[i], corpus[j]));
        }
    }
  }
  // (d) the four witness families at parameters <= 3: direct lower, direct
  // upper (complete bipartite pairs), strong lower, strong upper
  std::vector<FactorStats> tuples;
  for (int s = 1; s <= 3; s++)
    for (int d = s; d <= 3; d++)
      for (int delta = d; delta <= 3; delta++)
        for (int t = s; t <= delta; t++) tuples.push_back({d, delta, s, t});
  std::vector<std::string> direct_lower_misses;
  for (const auto& f1 : tuples)
    for (const auto& f2 : tuples) {
      auto [gl, gu] = bounds_direct(f1, f2);
      (void)gu;
      auto [w1, w2] = witness_direct_lower(f1, f2);
      int got = degeneracy_exact(product(w1, w2, ProductKind::Direct).base).degeneracy;
      c.instances++;
      if (got != gl) {
        std::ostringstream s;
        s << "(" << f1.d << "," << f1.max_degree << "," << f1.s << "," << f1.t << ")x("
          << f2.d << "," << f2.max_degree << "," << f2.s << "," << f2.t << ") formula " << gl
          << " actual " << got;
        direct_lower_misses.push_back(s.str());
      }
      auto [sl, su] = bounds_strong(f1, f2);
      (void)su;
      auto [v1, v2] = witness_strong_lower(f1, f2);
      c.require(degeneracy_exact(product(v1, v2, ProductKind::Strong).base).degeneracy == sl,
                "strong lower witness misses its bound");
      // direct upper: the complete-bipartite components alone attain it
      auto kk = product(complete_multipartite({f1.s, f1.t}), complete_multipartite({f2.s, f2.t}),
                        ProductKind::Direct);
      FactorStats b1{f1.s, f1.t, f1.s, f1.t}, b2{f2.s, f2.t, f2.s, f2.t};
      c.require(degeneracy_exact(kk.base).degeneracy == bounds_direct(b1, b2).second,
                "direct upper witness misses its bound");
    }
  if (!direct_lower_misses.empty()) {
    std::ostringstream s;
    s << "the direct lower witness family cannot attain the formula at "
      << direct_lower_misses.size() << " of " << tuples.size() * tuples.size()
      << " parameter pairs: " << direct_lower_misses.front()
      << " -- a max-degree-2 factor contains the 2-star, and against a factor containing "
         "K_{2,3} the direct product contains the 2-star x K_{2,3} component K_{3,4} of "
         "degeneracy min{t2, s2*Delta1} = 3; this interaction term is missing from the "
         "formula, so no graphs with these parameters can realise it";
    c.ok = false;
    c.detail = s.str();
  }
  for (int k1 = 1; k1 <= 3; k1++)
    for (int k2 = 1; k2 <= 3; k2++)
      for (int d1 = 1; d1 <= 3; d1++)
        for (int d2 = 1; d2 <= 3; d2++) {
          auto [w1, w2] = witness_strong_upper(k1, k2, d1, d2);
          long long target = d1 + d2 + std::min((long long)d1 * k2 * d2, (long long)d2 * k1 * d1);
          c.require(degeneracy_exact(product(w1, w2, ProductKind::Strong).base).degeneracy ==
                        target,
                    "strong upper witness misses its bound");
        }
}

void criterion4(Criterion& c) {
  auto corpus = all_graphs_upto(5);
  for (const auto& a : corpus) {
    auto dec = exact_width(a, WidthKind::Tree).decomposition;
    // lift_square
    auto sq = lift_square(a, dec);
    c.require(validate_decomposition(square(a), sq).empty(),
              "square lift invalid at " + graph6_encode(a));
    c.require(sq.width() <= (dec.width() + 1) * (a.max_degree() + 1) - 1,
              "square lift width exceeds the formula at " + graph6_encode(a));
    for (const auto& b : corpus) {
      auto lifted = lift_product(a, dec, b);
      auto prod = product(a, b, ProductKind::Strong);
      c.require(validate_decomposition(prod.base, lifted).empty(),
                "product lift invalid at " + pair_tag(a, b));
      c.require(lifted.width() <= (dec.width() + 1) * b.n() - 1,
                "product lift width exceeds the formula at " + pair_tag(a, b));
    }
  }
  for (const auto& a : connected_graphs_upto(5)) {
    std::vector<int> cover;
    vertex_cover_number(a, &cover, 16);
    for (const auto& b : connected_graphs_upto(5)) {
      auto dec2 = exact_width(b, WidthKind::Tree).decomposition;
      auto dec = vc_subdivision_decomp(a, cover, b, dec2);
      auto prod = product(a, b, ProductKind::Direct);
      c.require(validate_decomposition(prod.base, dec).empty(),
                "cover-subdivision invalid at " + pair_tag(a, b));
      c.require(dec.width() <=
                    (long long)cover.size() * (dec2.width() + 1) * (b.max_degree() + 1),
                "cover-subdivision width exceeds the formula at " + pair_tag(a, b));
    }
  }
  for (int k = 0; k <= 2; k++)
    for (int n = k + 1; n <= 6; n++) {
      if (n < 1) continue;
      auto gkn = gkn_decomposition(k, n);
      c.require(validate_decomposition(gkn.prod.base, gkn.dec).empty(),
                "gkn decomposition invalid at k=" + std::to_string(k) +
                    " n=" + std::to_string(n));
      bool bags_ok = true;
      for (const auto& bag : gkn.dec.bags)
        bags_ok &= int(bag.size()) <= 6 * n + (k + 1) * (k + 1);
      c.require(bags_ok, "gkn bag beyond 6n+(k+1)^2 at k=" + std::to_string(k) +
                             " n=" + std::to_string(n));
    }
}

void criterion5(Criterion& c) {
  // tw(P_n [] P_n) = n for n in {2, 3} (n = 1 is the degenerate single vertex)
  for (int n = 2; n <= 3; n++) {
    auto p = product(path_graph(n), path_graph(n), ProductKind::Cartesian);
    c.require(tw(p.base) == n, "grid treewidth differs at n=" + std::to_string(n));
  }
  for (const auto& g : all_graphs_upto(4))
    for (int m = 1; m <= 3; m++) {
      auto p = product(g, complete_graph(m), ProductKind::Strong);
      c.require(tw(p.base) == (tw(g) + 1) * m - 1,
                "clique blow-up width fails at " + graph6_encode(g));
    }
  for (int n = 1; n <= 8; n++)
    for (const auto& g : all_graphs(n)) {
      int t = tw(g), p = exact_width(g, WidthKind::Path).value;
      c.require(t <= p, "tw > pw at " + graph6_encode(g));
    }
}

void criterion6(Criterion& c) {
  for (int l = 1; l <= 4; l++) {
    Graph grid = grid_graph(l, l);
    Bramble b = grid_bramble(l);
    c.require(validate_bramble(grid, b).empty(), "grid bramble invalid at l=" + std::to_string(l));
    c.require(bramble_order(grid, b, true).order == l,
              "grid bramble order differs at l=" + std::to_string(l));
  }

  // product brambles on pairs with products of at most 12 vertices
  auto corpus = all_graphs_upto(5);
  for (const auto& g : corpus)
    for (const auto& h : corpus) {
      if (g.n() * h.n() > 12) continue;
      Bramble gb = optimal_bramble(g);
      MinorModel model;
      int eta = hadwiger_number(h, &model);
      Bramble pb = product_bramble(g, gb, h, model);
      auto sp = product(g, h, ProductKind::Strong);
      c.require(validate_bramble(sp.base, pb).empty(),
                "product bramble invalid at " + pair_tag(g, h));
      c.require(bramble_order(sp.base, pb, true).order >= eta * (tw(g) + 1),
                "product bramble order below eta(tw+1) at " + pair_tag(g, h));
    }

  // separations: order <= tw+1 wherever a separation exists (complete graphs
  // admit none under the definition and are reported as skipped)
  long long complete_skipped = 0;
  for (int n = 1; n <= 8; n++)
    for (const auto& g : all_graphs(n)) {
      if (g.n() < 2 || g.m() == g.n() * (g.n() - 1) / 2) {
        complete_skipped++;
        continue;
      }
      auto sep = min_separation_order(g, Rat(2, 3));
      c.require(sep.has_value() && sep->first <= tw(g) + 1,
                "separation order above tw+1 at " + graph6_encode(g));
    }
  printf("  (criterion 6 note: %lld complete/trivial graphs admit no separation at all "
         "under the 1<=|A|,|B| definition and are skipped)\n",
         complete_skipped);

  // separation lemma: with eps=2/3 < beta=3/4 the hypotheses force
  // v(H) >= 4 and v(G) >= k v(H), so every qualifying pair with a product of
  // at most 12 vertices has k = 0 and the bound 0 holds trivially; the
  // operation itself is exercised on every pair with both factors <= 4.
  Rat eps(2, 3), beta(3, 4);
  long long qualifying = 0;
  for (const auto& g : connected_graphs_upto(8))
    for (int hn = 4; hn <= 12 / std::max(1, g.n()); hn++) qualifying += 1;
  (void)qualifying;
  for (const auto& g : connected_graphs_upto(4))
    for (const auto& h : connected_graphs_upto(4)) {
      if (g.n() * h.n() > 12) continue;
      auto msep = min_separation_order(g, beta, 16);
      int k = msep ? msep->first : g.n();
      auto rep = verify_separation_lemma(g, h, eps, beta, k);
      if (rep.hypotheses_ok)
        c.require(rep.inequality_holds, "separation lemma violated at " + pair_tag(g, h));
      auto rep0 = verify_separation_lemma(g, h, eps, beta, 0);
      if (rep0.hypotheses_ok)
        c.require(rep0.inequality_holds, "trivial separation bound violated");
    }
}

void criterion7(Criterion& c) {
  for (const auto& g : connected_graphs_upto(8)) {
    auto pc = path_and_cover(g);
    int dll = dll_number(g);
    VertexSet cov(g.n());
    for (int v : pc.dfs_cover) cov.set(v);
    bool covers = true;
    for (auto [u, v] : g.edges()) covers &= cov.test(u) || cov.test(v);
    long long cap = ((dll + 1LL) * pc.path_number + 1) / 2;  // ceil
    c.require(covers && pc.vertex_cover_number <= int(pc.dfs_cover.size()) &&
                  int(pc.dfs_cover.size()) <= cap,
              "dfs-cover chain fails at " + graph6_encode(g));
    if (g.max_degree() > 1)
      c.require(g.n() <= moore_bound(g.max_degree(), diameter(g)),
                "degree-diameter cap fails at " + graph6_encode(g));
  }
  for (int k = 1; k <= 2; k++)
    for (const auto& g : connected_graphs_upto(6)) {
      if (dll_number(g) < k) continue;
      auto prod = product(g, path_graph(2 * k), ProductKind::Direct);
      auto m = find_minor(prod.base, complete_multipartite({k, k}),
                          std::max(kMinorHostAdvisory, prod.base.n()));
      c.require(m.has_value() &&
                    validate_model(prod.base, complete_multipartite({k, k}), *m).empty(),
                "K_{k,k} minor missing in the double-length path product at " +
                    graph6_encode(g));
    }
}

void criterion8(Criterion& c) {
  // select_bipartite_paths on 200 random valid instances
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; trial++) {
    int t = 2 + int(rng() % 2);
    int k = 1 + int(rng() % 8);
    Graph g(2 * t);
    std::vector<ColouredSubgraph> hosts;
    for (int h = 0; h < t; h++) {
      g.add_edge(2 * h, 2 * h + 1);
      hosts.push_back({{2 * h, 2 * h + 1}, {0, 1}});
    }
    std::vector<std::vector<int>> paths;
    for (int p = 0; p < k; p++) {
      int h1 = int(rng() % t), h2 = int(rng() % t);
      while (h2 == h1) h2 = int(rng() % t);
      std::vector<int> path{2 * h1 + int(rng() % 2)};
      int len = 1 + int(rng() % 3);
      for (int i = 0; i < len; i++) {
        int v = g.n();
        Graph bigger(v + 1);
        for (auto [x, y] : g.edges()) bigger.add_edge(x, y);
        g = bigger;
        g.add_edge(path.back(), v);
        path.push_back(v);
      }
      int to = 2 * h2 + int(rng() % 2);
      g.add_edge(path.back(), to);
      path.push_back(to);
      paths.push_back(path);
    }
    auto res = select_bipartite_paths(g, hosts, paths);
    bool size_ok = 2 * res.selected.size() >= paths.size();
    Graph uni(g.n());
    for (int h = 0; h < t; h++) uni.add_edge(2 * h, 2 * h + 1);
    for (int p : res.selected)
      for (size_t i = 0; i + 1 < paths[p].size(); i++)
        uni.add_edge(paths[p][i], paths[p][i + 1]);
    c.require(size_ok && bipartition(uni).has_value(),
              "switch selection failed on trial " + std::to_string(trial));
  }

  // lift_linked_paths on 100 random systems (trunks l <= 3, k <= 2)
  for (int trial = 0; trial < 100; trial++) {
    int l = 2 + int(rng() % 2);
    int k = 1 + int(rng() % 2);
    int trunk_len = 2 * k * (l - 1) + 1 + int(rng() % 2);
    Graph g(l * trunk_len);
    PathSystem sys;
    for (int t = 0; t < l; t++) {
      std::vector<int> trunk;
      for (int i = 0; i < trunk_len; i++) {
        int v = t * trunk_len + i;
        if (i > 0) g.add_edge(v - 1, v);
        trunk.push_back(v);
      }
      sys.trunks.push_back(trunk);
    }
    std::vector<int> next_ep(l, 0);
    for (int i = 0; i < l; i++)
      for (int j = i + 1; j < l; j++) {
        PathSystem::Link link{i, j, {}};
        for (int q = 0; q < 2 * k; q++) {
          std::vector<int> path{i * trunk_len + next_ep[i]++};
          int len = int(rng() % 3);
          for (int s = 0; s < len; s++) {
            int v = g.n();
            Graph bigger(v + 1);
            for (auto [x, y] : g.edges()) bigger.add_edge(x, y);
            g = bigger;
            g.add_edge(path.back(), v);
            path.push_back(v);
          }
          int to = j * trunk_len + next_ep[j]++;
          g.add_edge(path.back(), to);
          path.push_back(to);
          link.paths.push_back(path);
        }
        sys.links.push_back(link);
      }
    auto lift = lift_linked_paths(g, sys);
    bool ok = 2 * lift.x_pairs.size() >= sys.links.size();
    VertexSet used(lift.cover.base.n());
    for (const auto& trunk : lift.trunks) {
      ok &= is_path_in(lift.cover.base, trunk);
      for (int v : trunk) {
        ok &= !used.test(v);
        used.set(v);
      }
    }
    for (size_t x = 0; x < lift.x_pairs.size(); x++) {
      ok &= int(lift.linkages[x].size()) >= k;
      VertexSet interior(lift.cover.base.n());
      for (const auto& p : lift.linkages[x]) {
        ok &= is_path_in(lift.cover.base, p);
        for (size_t i = 1; i + 1 < p.size(); i++) {
          ok &= !interior.test(p[i]);
          interior.set(p[i]);
        }
      }
    }
    c.require(ok, "double-cover lift failed on trial " + std::to_string(trial));
  }

  // the full pipeline output is a valid grid-like-minor certificate
  Graph grid = grid_graph(4, 4);
  std::vector<std::vector<int>> trunks{{0, 1, 2, 3}, {12, 13, 14, 15}};
  auto glm = glm_pipeline(grid, trunks, 1);
  auto cover = double_cover(grid);
  c.require(validate_grid_like_minor(cover.base, glm).empty() && glm.order >= 2,
            "pipeline output rejected by the validator");
  printf("  (criterion 8 note: the asymptotic double-cover width inequalities carry "
         "unspecified constants; acceptance is certificate validity only)\n");
}

void criterion9(Criterion& c) {
  auto bounded = [](int v) { return ClassFlags::Param{true, v}; };
  ClassFlags paths, stars, trees, bdtrees, cliques, grids;
  for (ClassFlags* f : {&paths, &stars, &trees, &bdtrees, &cliques, &grids})
    f->monotone = f->contains_k2 = true;
  paths.tw = bounded(1);
  paths.pw = bounded(1);
  paths.maxdeg = bounded(2);
  paths.dll = bounded(2);
  stars.tw = bounded(1);
  stars.pw = bounded(1);
  stars.comp_cover = bounded(1);
  stars.dll = bounded(1);
  stars.pathnum = bounded(3);
  trees.tw = bounded(1);
  bdtrees.tw = bounded(1);
  bdtrees.maxdeg = bounded(3);
  grids.maxdeg = bounded(4);

  struct Named {
    const char* name;
    ClassFlags flags;
  };
  std::vector<Named> classes{{"paths", paths},   {"stars", stars},     {"trees", trees},
                             {"bdtrees", bdtrees}, {"cliques", cliques}, {"grids", grids}};

  // expected verdicts per theorem: the cartesian/strong pair requires a
  // bounded component order (none of the canned classes has one), the direct
  // pair additionally admits the cover/degree route
  auto expect = [&](ProductKind kind, WidthKind width, const Named& a, const Named& b) {
    auto wa = width == WidthKind::Tree ? a.flags.tw.bounded || a.flags.pw.bounded
                                       : a.flags.pw.bounded;
    auto wb = width == WidthKind::Tree ? b.flags.tw.bounded || b.flags.pw.bounded
                                       : b.flags.pw.bounded;
    if (!wa || !wb) return false;
    if (kind != ProductKind::Direct) return false;  // no canned class bounds v~
    auto cover = [](const Named& x) {
      return std::string(x.name) == "stars";  // the only bounded-cover class
    };
    auto deg = [](const Named& x) {
      std::string n = x.name;
      return n == "paths" || n == "bdtrees" || n == "grids";
    };
    return (cover(a) && deg(b)) || (cover(b) && deg(a));
  };

  for (auto kind : {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong})
    for (auto width : {WidthKind::Tree, WidthKind::Path})
      for (const auto& a : classes)
        for (const auto& b : classes) {
          Verdict v = classify(kind, width, a.flags, b.flags);
          bool want = expect(kind, width, a, b);
          c.require(v.bounded == want, std::string("verdict differs for ") + a.name + " x " +
                                           b.name + " (" + to_string(kind) + ")");
        }

  // probes: growth where unbounded families are in reach, flatness on a
  // bounded pair; none may contradict the verdicts
  auto star = [](int b) { return star_graph(b); };
  auto path = [](int n) { return path_graph(n); };
  {
    Verdict v = classify(ProductKind::Direct, WidthKind::Tree, stars, stars);
    auto probe = empirical_probe(ProductKind::Direct, WidthKind::Tree, star, star, {1, 2, 3, 4});
    c.require(!v.bounded && probe.growth_detected && !probe_contradicts(v, probe),
              "star x star probe inconsistent");
  }
  {
    Verdict v = classify(ProductKind::Cartesian, WidthKind::Tree, paths, paths);
    auto probe =
        empirical_probe(ProductKind::Cartesian, WidthKind::Tree, path, path, {2, 3, 4}, 16);
    c.require(!v.bounded && probe.growth_detected && !probe_contradicts(v, probe),
              "path [] path probe inconsistent");
  }
  {
    Verdict v = classify(ProductKind::Direct, WidthKind::Tree, stars, paths);
    auto probe =
        empirical_probe(ProductKind::Direct, WidthKind::Tree, star, path, {2, 3, 4}, 16);
    c.require(v.bounded && !probe_contradicts(v, probe), "star x path probe inconsistent");
  }
}

void criterion10(Criterion& c) {
  std::ostringstream out1, err1, out2, err2;
  int c1 = cli::run({"sweep"}, out1, err1);
  int c2 = cli::run({"sweep"}, out2, err2);
  c.require(c1 == 0 && c2 == 0, "sweep failed");
  c.require(out1.str() == out2.str(), "sweep reports differ between runs");
  c.require(!out1.str().empty(), "sweep produced no report");
}

}  // namespace

int main() {
  run_criterion(1, "multipartite characterisations agree with the oracle", criterion1);
  run_criterion(2, "clique law on strong products", criterion2);
  run_criterion(3, "degeneracy formulas and witness families", criterion3);
  run_criterion(4, "decomposition constructions validate within their widths", criterion4);
  run_criterion(5, "exact widths (grids, clique blow-ups, tw <= pw)", criterion5);
  run_criterion(6, "lower-bound certificates", criterion6);
  run_criterion(7, "cover, degree-diameter and double-length-path machinery", criterion7);
  run_criterion(8, "double-cover switching machinery", criterion8);
  run_criterion(9, "boundedness classification and probes", criterion9);
  run_criterion(10, "byte-identical sweep reports", criterion10);
  if (failures == 0) {
    printf("acceptance: all 10 criteria PASS\n");
    return 0;
  }
  printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
