#include <doctest.h>

#include "prodwidth/catalog.hpp"
#include "prodwidth/codec.hpp"
#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"
#include "prodwidth/products.hpp"

using namespace prodwidth;

TEST_SUITE_BEGIN("graphcore");

TEST_CASE("products on two-vertex factors") {
  Graph p2 = path_graph(2);
  Graph k2 = complete_graph(2);

  auto c4 = product(p2, p2, ProductKind::Cartesian);
  CHECK(c4.base.n() == 4);
  CHECK(c4.base.m() == 4);
  CHECK(is_isomorphic(c4.base, cycle_graph(4)));

  auto matching = product(k2, k2, ProductKind::Direct);
  CHECK(matching.base.n() == 4);
  CHECK(matching.base.m() == 2);
  CHECK(matching.base.max_degree() == 1);

  auto k4 = product(k2, k2, ProductKind::Strong);
  CHECK(is_isomorphic(k4.base, complete_graph(4)));
}

TEST_CASE("degree identities on all pairs up to 4 vertices") {
  auto corpus = all_graphs_upto(4);
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      auto pc = product(a, b, ProductKind::Cartesian);
      auto pd = product(a, b, ProductKind::Direct);
      auto ps = product(a, b, ProductKind::Strong);
      for (int u = 0; u < a.n(); u++)
        for (int v = 0; v < b.n(); v++) {
          int id = pc.pair_id(u, v);
          int d1 = a.degree(u), d2 = b.degree(v);
          REQUIRE(pc.base.degree(id) == d1 + d2);
          REQUIRE(pd.base.degree(id) == d1 * d2);
          REQUIRE(ps.base.degree(id) == d1 + d2 + d1 * d2);
        }
      REQUIRE(ps.base.m() == pc.base.m() + pd.base.m());
      for (auto [u, v] : ps.base.edges())
        REQUIRE((pc.base.has_edge(u, v) || pd.base.has_edge(u, v)));
    }
}

TEST_CASE("subgraph monotonicity under the induced pairing") {
  Graph g1 = cycle_graph(5), g2 = complete_graph(3);
  Graph h1 = path_graph(5);  // C5 minus one edge on the same ids
  Graph h2(3);
  h2.add_edge(0, 1);
  for (auto kind : {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong}) {
    auto big = product(g1, g2, kind);
    auto small = product(h1, h2, kind);
    for (auto [u, v] : small.base.edges()) REQUIRE(big.base.has_edge(u, v));
  }
}

TEST_CASE("direct products with a bipartite factor are bipartite") {
  for (const auto& g : all_graphs_upto(4)) {
    auto dc = product(g, complete_graph(2), ProductKind::Direct);
    CHECK(bipartition(dc.base).has_value());
  }
  auto both = product(cycle_graph(6), path_graph(3), ProductKind::Direct);
  CHECK(bipartition(both.base).has_value());
}

TEST_CASE("family generators") {
  CHECK(is_isomorphic(daddy_longlegs(2), path_graph(5)));
  CHECK(daddy_longlegs(3).n() == 7);
  CHECK(daddy_longlegs(3).max_degree() == 3);

  CHECK(is_isomorphic(complete_multipartite({1, 1, 1, 1}), complete_graph(4)));
  CHECK(is_isomorphic(complete_multipartite({1, 1}, 2), complete_graph(4)));
  CHECK(is_isomorphic(complete_multipartite({3, 4}), product(Graph(1), complete_multipartite({3, 4}), ProductKind::Cartesian).base));

  Graph g26 = gkn_graph(2, 6);
  CHECK(g26.n() == 6);
  CHECK(is_connected(g26));

  CHECK_THROWS_AS(gkn_graph(3, 3), std::invalid_argument);

  Graph reg3 = regular_circulant(3);
  CHECK(reg3.max_degree() == 3);
  CHECK(reg3.min_degree() == 3);
  Graph reg2 = regular_circulant(2);
  CHECK(reg2.max_degree() == 2);
}

TEST_CASE("square") {
  Graph p4sq = square(path_graph(4));
  CHECK(p4sq.m() == 5);
  CHECK(p4sq.has_edge(0, 2));
  CHECK(p4sq.has_edge(1, 3));
  CHECK(!p4sq.has_edge(0, 3));

  Graph k5 = complete_graph(5);
  CHECK(square(k5) == k5);
  CHECK(is_isomorphic(square(cycle_graph(5)), complete_graph(5)));

  for (const auto& g : all_graphs(5)) {
    Graph sq = square(g);
    for (int v = 0; v < g.n(); v++)
      for (int a = g.neighbors(v).first(); a >= 0; a = g.neighbors(v).next(a))
        for (int b = g.neighbors(v).next(a); b >= 0; b = g.neighbors(v).next(b))
          REQUIRE(sq.has_edge(a, b));  // closed neighbourhoods become cliques
  }
}

TEST_CASE("basic parameters") {
  auto p = basic_params(complete_multipartite({3, 4}));
  CHECK(p.max_degree == 4);
  CHECK(p.min_degree == 3);
  CHECK(p.bipartite);
  int zeros = 0;
  for (int c : p.two_coloring) zeros += c == 0;
  CHECK((zeros == 3 || zeros == 4));

  auto q = basic_params(disjoint_union({path_graph(3), complete_graph(4)}));
  CHECK(q.max_component_order == 4);
  CHECK(!q.connected);
  CHECK(q.component_list.size() == 2);

  CHECK(!basic_params(cycle_graph(5)).bipartite);
}

TEST_CASE("graph6 codec") {
  Graph s4 = graph6_decode("D?{");
  CHECK(is_isomorphic(s4, star_graph(4)));
  CHECK(graph6_encode(s4) == "D?{");

  // round trip across all 5-vertex classes, plus a large-order graph
  for (const auto& g : all_graphs(5)) REQUIRE(graph6_decode(graph6_encode(g)) == g);
  Graph big = path_graph(80);
  CHECK(graph6_decode(graph6_encode(big)) == big);

  CHECK_THROWS_AS(graph6_decode(""), parse_error);
  CHECK_THROWS_AS(graph6_decode("D"), parse_error);
}

TEST_CASE("edge list codec") {
  Graph p3 = edgelist_decode("0 1\n1 2\n");
  CHECK(p3 == path_graph(3));
  CHECK_THROWS_AS(edgelist_decode("0 0\n"), parse_error);
  CHECK_THROWS_AS(edgelist_decode("0\n"), parse_error);
  // comments and declared order
  Graph g = edgelist_decode("# n 4\n0 1\n# trailing comment\n");
  CHECK(g.n() == 4);
  CHECK(g.m() == 1);
  try {
    edgelist_decode("0 1\n2 2\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("codec round trip on all graphs up to 7 vertices") {
  for (int n = 1; n <= 7; n++)
    for (const auto& g : all_graphs(n)) {
      REQUIRE(graph6_decode(graph6_encode(g)) == g);
      REQUIRE(edgelist_decode(edgelist_encode(g)) == g);
    }
}

TEST_CASE("catalogue counts match the literature") {
  CHECK(all_graphs(4).size() == 11);
  CHECK(all_graphs(5).size() == 34);
  CHECK(all_graphs(6).size() == 156);
  CHECK(all_graphs(7).size() == 1044);
  CHECK(connected_graphs(5).size() == 21);
  CHECK(connected_graphs(7).size() == 853);
}

TEST_CASE("product size guard") {
  Graph big = path_graph(2000);
  CHECK_THROWS_AS(product(big, big, ProductKind::Cartesian), std::invalid_argument);
}

TEST_SUITE_END();
