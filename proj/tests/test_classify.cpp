#include <doctest.h>

#include "prodwidth/classify.hpp"
#include "prodwidth/families.hpp"

using namespace prodwidth;

namespace {

ClassFlags::Param bounded(int v) { return {true, v}; }
ClassFlags::Param unbounded() { return {false, std::nullopt}; }

// canned monotone classes (flags describe the subgraph closure)
ClassFlags paths_class() {
  ClassFlags f;
  f.tw = bounded(1);
  f.pw = bounded(1);
  f.maxdeg = bounded(2);
  f.comp_order = unbounded();
  f.comp_cover = unbounded();
  f.dll = bounded(2);
  f.pathnum = unbounded();
  f.monotone = f.contains_k2 = true;
  return f;
}

ClassFlags stars_class() {
  ClassFlags f;
  f.tw = bounded(1);
  f.pw = bounded(1);
  f.maxdeg = unbounded();
  f.comp_order = unbounded();
  f.comp_cover = bounded(1);
  f.dll = bounded(1);
  f.pathnum = bounded(3);
  f.monotone = f.contains_k2 = true;
  return f;
}

ClassFlags trees_class() {
  ClassFlags f;
  f.tw = bounded(1);
  f.monotone = f.contains_k2 = true;
  return f;
}

ClassFlags matchings_class() {
  ClassFlags f;
  f.tw = bounded(1);
  f.pw = bounded(1);
  f.maxdeg = bounded(1);
  f.comp_order = bounded(2);
  f.comp_cover = bounded(1);
  f.dll = bounded(0);
  f.pathnum = bounded(2);
  f.monotone = f.contains_k2 = true;
  return f;
}

ClassFlags cliques_class() {
  ClassFlags f;  // subgraph closure of all cliques = all graphs
  f.monotone = f.contains_k2 = true;
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("closure rules") {
  std::vector<std::string> steps;
  ClassFlags f;
  f.pw = bounded(2);
  f.monotone = true;
  ClassFlags closed = close_flags(f, &steps);
  CHECK(closed.tw.bounded);

  ClassFlags g = stars_class();  // dll + pathnum bounded
  g.comp_cover = unbounded();
  ClassFlags cg = close_flags(g);
  CHECK(cg.comp_cover.bounded);

  ClassFlags h;
  h.maxdeg = bounded(3);
  h.pathnum = bounded(4);
  ClassFlags ch = close_flags(h);
  CHECK(ch.comp_order.bounded);
  CHECK(ch.comp_cover.bounded);  // through comp_order

  ClassFlags m = matchings_class();
  ClassFlags cm = close_flags(m);
  CHECK(cm.pathnum.bounded);
  CHECK(cm.comp_cover.bounded);
}

TEST_CASE("theorem preconditions") {
  ClassFlags ok = paths_class();
  ClassFlags bad = paths_class();
  bad.monotone = false;
  CHECK_THROWS_AS(classify(ProductKind::Strong, WidthKind::Tree, ok, bad),
                  std::invalid_argument);
  ClassFlags nok2 = paths_class();
  nok2.contains_k2 = false;
  CHECK_THROWS_AS(classify(ProductKind::Direct, WidthKind::Tree, ok, nok2),
                  std::invalid_argument);
  // cartesian/strong theorems do not need K2
  CHECK_NOTHROW(classify(ProductKind::Strong, WidthKind::Tree, ok, nok2));
}

TEST_CASE("spec verdicts") {
  // strong/tree with one component-order-bounded class
  CHECK(classify(ProductKind::Strong, WidthKind::Tree, matchings_class(), paths_class())
            .bounded);
  // direct/tree on paths x paths: no disjunct holds
  CHECK(!classify(ProductKind::Direct, WidthKind::Tree, paths_class(), paths_class()).bounded);
  // direct/tree: cover on one side, degree on the other
  CHECK(classify(ProductKind::Direct, WidthKind::Tree, stars_class(), paths_class()).bounded);

  auto v = classify(ProductKind::Direct, WidthKind::Tree, paths_class(), stars_class());
  CHECK(v.bounded);  // symmetric in the factor order
}

TEST_CASE("classification is symmetric in the factors") {
  std::vector<ClassFlags> classes{paths_class(), stars_class(), trees_class(),
                                  matchings_class(), cliques_class()};
  for (auto kind : {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong})
    for (auto width : {WidthKind::Tree, WidthKind::Path})
      for (const auto& a : classes)
        for (const auto& b : classes)
          REQUIRE(classify(kind, width, a, b).bounded == classify(kind, width, b, a).bounded);
}

TEST_CASE("probe examples") {
  auto star = [](int b) { return star_graph(b); };
  auto path = [](int n) { return path_graph(n); };
  auto k3 = [](int) { return complete_graph(3); };

  auto grow = empirical_probe(ProductKind::Direct, WidthKind::Tree, star, star, {1, 2, 3, 4});
  CHECK(grow.widths == std::vector<int>{1, 2, 3, 4});
  CHECK(grow.growth_detected);

  auto flat = empirical_probe(ProductKind::Strong, WidthKind::Tree, path, k3, {2, 3, 4, 5},
                              20);
  CHECK(flat.widths == std::vector<int>{5, 5, 5, 5});
  CHECK(!flat.growth_detected);

  auto cart = empirical_probe(ProductKind::Cartesian, WidthKind::Tree, path, path, {2, 3, 4},
                              16);
  CHECK(cart.widths == std::vector<int>{2, 3, 4});
  CHECK(cart.growth_detected);
}

TEST_CASE("probes never contradict the verdicts") {
  auto star = [](int b) { return star_graph(b); };
  auto path = [](int n) { return path_graph(n); };

  Verdict star_star = classify(ProductKind::Direct, WidthKind::Tree, stars_class(),
                               stars_class());
  auto p1 = empirical_probe(ProductKind::Direct, WidthKind::Tree, star, star, {1, 2, 3, 4});
  CHECK(!star_star.bounded);
  CHECK(!probe_contradicts(star_star, p1));

  Verdict star_path = classify(ProductKind::Direct, WidthKind::Tree, stars_class(),
                               paths_class());
  auto p2 = empirical_probe(ProductKind::Direct, WidthKind::Tree, star, path, {2, 3, 4, 5},
                            20);
  CHECK(star_path.bounded);
  CHECK(!probe_contradicts(star_path, p2));
}

TEST_SUITE_END();
