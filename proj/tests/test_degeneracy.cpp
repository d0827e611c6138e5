#include <doctest.h>

#include "prodwidth/catalog.hpp"
#include "prodwidth/degeneracy.hpp"
#include "prodwidth/families.hpp"
#include "prodwidth/products.hpp"

using namespace prodwidth;

namespace {

int degen(const Graph& g) { return degeneracy_exact(g).degeneracy; }

// honest factor stats: every Pareto-maximal complete-bipartite pair present
std::vector<FactorStats> honest_stats(const Graph& g) {
  std::vector<FactorStats> out;
  for (auto st : bipartite_pairs(g, std::max(12, g.n()))) out.push_back(stats_with_pair(g, st));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("degeneracy");

TEST_CASE("peeling certificate") {
  auto prof = degeneracy_exact(complete_multipartite({2, 5}));
  CHECK(prof.degeneracy == 2);
  CHECK(prof.order.size() == 7);
  int max_step = 0;
  for (int d : prof.step_degrees) max_step = std::max(max_step, d);
  CHECK(max_step == prof.degeneracy);

  CHECK(degen(Graph(5)) == 0);

  auto c4c4 = product(cycle_graph(4), cycle_graph(4), ProductKind::Direct);
  CHECK(degen(c4c4.base) == 4);

  for (const auto& g : all_graphs(5)) REQUIRE(degen(g) <= g.max_degree());
}

TEST_CASE("direct bound formula") {
  // complete bipartite factors collapse both bounds
  FactorStats f1{2, 5, 2, 5}, f2{3, 4, 3, 4};
  auto [lo, hi] = bounds_direct(f1, f2);
  CHECK(lo == std::min(2 * 4, 3 * 5));
  CHECK(lo == hi);

  // regular factors collapse too
  FactorStats cyc{2, 2, 1, 2};
  auto [lo2, hi2] = bounds_direct(cyc, cyc);
  CHECK(lo2 == 4);
  CHECK(hi2 == 4);

  CHECK_THROWS_AS(bounds_direct(FactorStats{0, 2, 1, 1}, cyc), std::invalid_argument);
}

TEST_CASE("complete bipartite direct products") {
  for (int s1 = 1; s1 <= 3; s1++)
    for (int t1 = s1; t1 <= 3; t1++)
      for (int s2 = 1; s2 <= 3; s2++)
        for (int t2 = s2; t2 <= 3; t2++) {
          auto p = product(complete_multipartite({s1, t1}), complete_multipartite({s2, t2}),
                           ProductKind::Direct);
          REQUIRE(degen(p.base) == std::min(s1 * t2, s2 * t1));
        }
}

TEST_CASE("strong complete-bipartite formula") {
  CHECK(strong_cbg_f(1, 2, 1, 2) == 3);
  CHECK(strong_cbg_f(1, 1, 1, 1) == 3);  // K2 (x) K2 = K4
  auto p = product(complete_multipartite({2, 3}), complete_multipartite({2, 4}),
                   ProductKind::Strong);
  CHECK(strong_cbg_f(2, 3, 2, 4) == degen(p.base));

  for (int s1 = 1; s1 <= 2; s1++)
    for (int t1 = s1; t1 <= 3; t1++)
      for (int s2 = 1; s2 <= 2; s2++)
        for (int t2 = s2; t2 <= 3; t2++) {
          auto q = product(complete_multipartite({s1, t1}), complete_multipartite({s2, t2}),
                           ProductKind::Strong);
          REQUIRE(strong_cbg_f(s1, t1, s2, t2) == degen(q.base));
        }
}

TEST_CASE("strong bound formula") {
  FactorStats f{1, 3, 1, 1};
  auto [g, h] = bounds_strong(f, f);
  CHECK(g == 4);  // max{3, f(1,1,1,1)=3, min{3,3}+1}
  CHECK(h == 1 + 1 + std::min(3, 3));

  FactorStats reg{2, 2, 1, 2};
  auto [g2, h2] = bounds_strong(reg, reg);
  CHECK(g2 == 2 + 2 + 4);
  CHECK(g2 == h2);

  FactorStats star1{1, 4, 1, 1}, star2{1, 6, 1, 1};
  auto [g3, h3] = bounds_strong(star1, star2);
  CHECK(g3 == std::min(4, 6) + 1);
  CHECK(h3 >= g3);
}

TEST_CASE("cartesian additivity on all pairs up to 4 vertices") {
  auto corpus = all_graphs_upto(4);
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      REQUIRE(degen(product(a, b, ProductKind::Cartesian).base) == degen(a) + degen(b));
}

TEST_CASE("direct and strong sandwich on all pairs up to 4 vertices") {
  auto corpus = all_graphs_upto(4);
  for (const auto& a : corpus) {
    auto stats_a = honest_stats(a);
    if (stats_a.empty()) continue;  // edgeless: hypotheses unmet
    for (const auto& b : corpus) {
      auto stats_b = honest_stats(b);
      if (stats_b.empty()) continue;
      int dd = degen(product(a, b, ProductKind::Direct).base);
      int ds = degen(product(a, b, ProductKind::Strong).base);
      for (const auto& fa : stats_a)
        for (const auto& fb : stats_b) {
          auto [lo, hi] = bounds_direct(fa, fb);
          REQUIRE(lo <= dd);
          REQUIRE(dd <= hi);
          auto [lo2, hi2] = bounds_strong(fa, fb);
          REQUIRE(lo2 <= ds);
          REQUIRE(ds <= hi2);
        }
    }
  }
}

TEST_CASE("direct lower-bound witness family") {
  FactorStats f{1, 2, 1, 2};
  auto [g1, g2] = witness_direct_lower(f, f);
  CHECK(g1.max_degree() == 2);
  CHECK(degen(g1) == 1);
  CHECK(degen(product(g1, g2, ProductKind::Direct).base) == bounds_direct(f, f).first);

  FactorStats f2{2, 2, 1, 2};
  auto [h1, h2] = witness_direct_lower(f2, f2);
  CHECK(degen(product(h1, h2, ProductKind::Direct).base) == 4);
}

TEST_CASE("strong witness families at small parameters") {
  for (int d = 1; d <= 2; d++)
    for (int delta = d; delta <= 3; delta++)
      for (int s = 1; s <= d; s++)
        for (int t = s; t <= delta; t++) {
          FactorStats f{d, delta, s, t};
          auto [g1, g2] = witness_strong_lower(f, f);
          CHECK(g1.max_degree() == delta);
          CHECK(degen(g1) == d);
          REQUIRE(degen(product(g1, g2, ProductKind::Strong).base) ==
                  bounds_strong(f, f).first);
        }
}

TEST_CASE("strong upper-bound witness family") {
  {
    auto [g1, g2] = witness_strong_upper(2, 2, 1, 1);
    CHECK(g1.max_degree() == 2);
    CHECK(degen(g1) == 1);
    CHECK(degen(product(g1, g2, ProductKind::Strong).base) == 1 + 1 + std::min(2, 2));
  }
  {
    auto [g1, g2] = witness_strong_upper(2, 3, 2, 1);
    CHECK(g1.max_degree() == 4);
    CHECK(g2.max_degree() == 3);
    CHECK(degen(product(g1, g2, ProductKind::Strong).base) == 2 + 1 + std::min(2 * 3, 1 * 4));
  }
  for (int k1 = 1; k1 <= 2; k1++)
    for (int k2 = 1; k2 <= 2; k2++)
      for (int d1 = 1; d1 <= 2; d1++)
        for (int d2 = 1; d2 <= 2; d2++) {
          auto [g1, g2] = witness_strong_upper(k1, k2, d1, d2);
          CHECK(g1.max_degree() == k1 * d1);
          CHECK(degen(g1) == d1);
          REQUIRE(degen(product(g1, g2, ProductKind::Strong).base) ==
                  d1 + d2 + std::min(d1 * k2 * d2, d2 * k1 * d1));
        }
}

TEST_CASE("bipartite pair extraction") {
  auto pairs = bipartite_pairs(complete_multipartite({2, 3}));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<int, int>{2, 3});

  auto k4 = bipartite_pairs(complete_graph(4));
  REQUIRE(!k4.empty());
  CHECK(k4.back() == std::pair<int, int>{2, 2});

  CHECK(bipartite_pairs(Graph(3)).empty());
}

TEST_SUITE_END();
