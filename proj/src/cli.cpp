#include "prodwidth/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "prodwidth/catalog.hpp"
#include "prodwidth/codec.hpp"
#include "prodwidth/errors.hpp"
#include "prodwidth/families.hpp"
#include "prodwidth/json_io.hpp"

namespace prodwidth::cli {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

int env_budget() {
  const char* v = std::getenv("PRODWIDTH_BUDGET");
  if (!v) return -1;
  return std::atoi(v);
}

// explicit flag wins, then the environment, then the per-op advisory
int pick_budget(int flag, int advisory) {
  if (flag > 0) return flag;
  int e = env_budget();
  return e > 0 ? e : advisory;
}

FactorStats stats_from_list(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() != 4)
    throw std::invalid_argument("stats must be four integers: d,maxdeg,s,t");
  FactorStats f;
  f.d = v[0];
  f.max_degree = v[1];
  f.s = v[2];
  f.t = v[3];
  return f;
}

// ---------------------------------------------------------------------------
// sweep: the reproducibility driver over the small-graph corpus
// ---------------------------------------------------------------------------

struct Sweep {
  std::ostream& out;
  int max_n;
  bool inject_fault;
  int failures = 0;

  void fail(const std::string& check, const std::string& counterexample) {
    failures++;
    out << "FAIL " << check << ": counterexample " << counterexample << "\n";
  }
  void ok(const std::string& check, long long count) {
    out << "ok " << check << " (" << count << " instances)\n";
  }

  void run() {
    if (max_n < 1) {
      out << "warning: empty corpus, sweep passes vacuously\n";
      out << "sweep: PASS\n";
      return;
    }
    auto corpus = all_graphs_upto(std::min(max_n, 8));
    auto pair_corpus = all_graphs_upto(std::min(max_n, 4));

    // product degree identities + strong = cartesian + direct
    {
      long long count = 0;
      bool good = true;
      for (const auto& a : pair_corpus) {
        for (const auto& b : pair_corpus) {
          auto pc = product(a, b, ProductKind::Cartesian);
          auto pd = product(a, b, ProductKind::Direct);
          auto ps = product(a, b, ProductKind::Strong);
          for (int u = 0; u < a.n() && good; u++)
            for (int v = 0; v < b.n() && good; v++) {
              int id = pc.pair_id(u, v);
              int d1 = a.degree(u), d2 = b.degree(v);
              if (pc.base.degree(id) != d1 + d2 || pd.base.degree(id) != d1 * d2 ||
                  ps.base.degree(id) != d1 + d2 + d1 * d2)
                good = false;
            }
          if (good) {
            for (auto [u, v] : ps.base.edges())
              if (!pc.base.has_edge(u, v) && !pd.base.has_edge(u, v)) good = false;
            if (ps.base.m() != pc.base.m() + pd.base.m()) good = false;
          }
          count++;
          if (!good) {
            fail("product-degree-identities", graph6_encode(a) + " " + graph6_encode(b));
            break;
          }
        }
        if (!good) break;
      }
      if (failures == 0) ok("product-degree-identities", count);
    }

    // codec round trips
    {
      long long count = 0;
      bool good = true;
      for (const auto& g : corpus) {
        Graph back = graph6_decode(graph6_encode(g));
        Graph back2 = edgelist_decode(edgelist_encode(g));
        count++;
        if (!(back == g) || !(back2 == g)) {
          fail("codec-roundtrip", graph6_encode(g));
          good = false;
          break;
        }
      }
      if (good) ok("codec-roundtrip", count);
    }

    // clique law on the strong product
    {
      long long count = 0;
      bool good = true;
      for (const auto& a : pair_corpus) {
        for (const auto& b : pair_corpus) {
          int wa = clique_number(a), wb = clique_number(b);
          auto ps = product(a, b, ProductKind::Strong);
          int wp = clique_number(ps.base);
          count++;
          if (wp != wa * wb) {
            fail("clique-law", graph6_encode(a) + " " + graph6_encode(b));
            good = false;
            break;
          }
        }
        if (!good) break;
      }
      if (good) ok("clique-law", count);
    }

    // multipartite characterisations against the oracle
    {
      std::vector<std::vector<int>> patterns{{1, 1}, {2, 1},    {1, 1, 1},   {3, 1},
                                             {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
      auto small = all_graphs_upto(std::min(max_n, 3));
      long long count = 0;
      bool good = true;
      for (const auto& a : small) {
        for (const auto& b : small) {
          for (const auto& parts : patterns) {
            MultipartitePattern p{parts, 0};
            for (auto kind :
                 {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong}) {
              if (kind == ProductKind::Direct && (a.m() == 0 || b.m() == 0)) continue;
              bool expected =
                  oracle_subgraph(product(a, b, kind).base, p, 64).has_value();
              bool got = false;
              if (kind == ProductKind::Cartesian) got = decide_cartesian(a, b, p).has_value();
              if (kind == ProductKind::Direct) got = decide_direct(a, b, p).has_value();
              if (kind == ProductKind::Strong) got = decide_strong(a, b, p).has_value();
              count++;
              if (got != expected) {
                fail("multipartite-vs-oracle",
                     graph6_encode(a) + " " + graph6_encode(b) + " kind " + to_string(kind));
                good = false;
                break;
              }
            }
            if (!good) break;
          }
          if (!good) break;
        }
        if (!good) break;
      }
      if (good) ok("multipartite-vs-oracle", count);
    }

    // cartesian degeneracy additivity (the fault injection target)
    {
      long long count = 0;
      bool good = true;
      for (const auto& a : pair_corpus) {
        for (const auto& b : pair_corpus) {
          int lhs = degeneracy_exact(product(a, b, ProductKind::Cartesian).base).degeneracy;
          int rhs = degeneracy_exact(a).degeneracy + degeneracy_exact(b).degeneracy;
          if (inject_fault) rhs += 1;
          count++;
          if (lhs != rhs) {
            fail("cartesian-degeneracy-additivity",
                 graph6_encode(a) + " " + graph6_encode(b));
            good = false;
            break;
          }
        }
        if (!good) break;
      }
      if (good) ok("cartesian-degeneracy-additivity", count);
    }

    // widths: tw <= pw, separations, covers, Moore
    {
      long long count = 0;
      bool good = true;
      for (const auto& g : corpus) {
        int tw = exact_width(g, WidthKind::Tree).value;
        int pw = exact_width(g, WidthKind::Path).value;
        if (tw > pw) {
          fail("tree-vs-path-width", graph6_encode(g));
          good = false;
          break;
        }
        if (g.n() >= 2 && g.m() < g.n() * (g.n() - 1) / 2) {
          auto sep = min_separation_order(g, Rat(2, 3));
          if (!sep || sep->first > tw + 1) {
            fail("separation-vs-treewidth", graph6_encode(g));
            good = false;
            break;
          }
        }
        if (is_connected(g) && g.n() >= 1) {
          auto pc = path_and_cover(g);
          int dll = dll_number(g);
          long long cap = ((dll + 1LL) * pc.path_number + 1) / 2;
          if (pc.vertex_cover_number > int(pc.dfs_cover.size()) ||
              int(pc.dfs_cover.size()) > cap) {
            fail("dfs-cover-bound", graph6_encode(g));
            good = false;
            break;
          }
          if (g.max_degree() > 1 && g.n() > moore_bound(g.max_degree(), diameter(g))) {
            fail("moore-bound", graph6_encode(g));
            good = false;
            break;
          }
        }
        count++;
      }
      if (good) ok("width-and-cover-checks", count);
    }

    // constructions validate
    {
      long long count = 0;
      bool good = true;
      for (int l = 1; l <= 3 && good; l++) {
        Graph grid = grid_graph(l, l);
        Bramble b = grid_bramble(l);
        if (!validate_bramble(grid, b).empty() ||
            bramble_order(grid, b, true).order != l) {
          fail("grid-bramble", "l=" + std::to_string(l));
          good = false;
        }
        count++;
      }
      for (auto [k, n] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 4}, {2, 5}}) {
        auto gkn = gkn_decomposition(k, n);
        if (!validate_decomposition(gkn.prod.base, gkn.dec).empty()) {
          fail("gkn-decomposition", "k=" + std::to_string(k) + " n=" + std::to_string(n));
          good = false;
          break;
        }
        count++;
      }
      if (good) ok("certificate-constructions", count);
    }

    out << "sweep: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
  }
};

Graph load(const std::string& path) { return read_graph_file(path); }

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact certificates for widths and substructures of graph products"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  int budget_flag = -1;
  app.add_option("--budget", budget_flag, "override the search-size advisories");

  std::string kind_s = "strong", width_s = "tree", g_path, g1_path, g2_path, h_path;
  std::string parts_s, stats1_s, stats2_s, op_s, c1_path, c2_path, exact_s = "auto";
  std::string format_s = "g6", out_path;
  int overlay = 0, gkn_k = 0, gkn_n = 1, want_k = 1;
  bool use_oracle = false, with_lb = false, witness = false, json_out = false;
  int max_n = 5;
  bool inject_fault = false;

  auto* c_product = app.add_subcommand("product", "build a graph product");
  c_product->add_option("--kind", kind_s)->required();
  c_product->add_option("g1", g1_path)->required();
  c_product->add_option("g2", g2_path)->required();
  c_product->add_option("--format", format_s);

  auto* c_degen = app.add_subcommand("degen", "exact degeneracy with a peeling order");
  c_degen->add_option("--g,g", g_path)->required();

  auto* c_db = app.add_subcommand("degen-bounds", "degeneracy bound formulas + witnesses");
  c_db->add_option("--kind", kind_s)->required();
  c_db->add_option("--stats1", stats1_s)->required();
  c_db->add_option("--stats2", stats2_s)->required();
  c_db->add_flag("--witness", witness);

  auto* c_multi = app.add_subcommand("multipartite", "complete multipartite containment");
  c_multi->add_option("--kind", kind_s)->required();
  c_multi->add_option("--g1", g1_path)->required();
  c_multi->add_option("--g2", g2_path)->required();
  c_multi->add_option("--parts", parts_s)->required();
  c_multi->add_option("--overlay", overlay);
  c_multi->add_flag("--oracle", use_oracle, "decide on the built product instead");

  auto* c_dec = app.add_subcommand("decompose", "decomposition constructions");
  c_dec->add_option("--op", op_s, "lift|square|vcsub|gkn")->required();
  c_dec->add_option("--g", g_path);
  c_dec->add_option("--g1", g1_path);
  c_dec->add_option("--g2", g2_path);
  c_dec->add_option("--k", gkn_k);
  c_dec->add_option("--n", gkn_n);

  auto* c_width = app.add_subcommand("width", "exact treewidth/pathwidth");
  c_width->add_option("--kind", width_s);
  c_width->add_option("file", g_path)->required();
  c_width->add_flag("--json", json_out);

  auto* c_bounds = app.add_subcommand("bounds", "aggregated bound report for a product");
  c_bounds->add_option("--g1", g1_path)->required();
  c_bounds->add_option("--g2", g2_path)->required();
  c_bounds->add_option("--kind", kind_s)->required();
  c_bounds->add_option("--exact", exact_s, "auto|force|off");

  auto* c_minor = app.add_subcommand("minor", "minor containment with a model");
  c_minor->set_help_flag("--help");  // frees -h for the pattern option
  c_minor->add_option("--g,g", g_path)->required();
  c_minor->add_option("--h", h_path)->required();

  auto* c_dll = app.add_subcommand("dll", "daddy-longlegs number");
  c_dll->add_option("file", g_path)->required();
  auto* c_pn = app.add_subcommand("pn", "path number (longest path order)");
  c_pn->add_option("file", g_path)->required();
  auto* c_vc = app.add_subcommand("vc", "vertex cover number");
  c_vc->add_option("file", g_path)->required();

  auto* c_dc = app.add_subcommand("doublecover", "direct product with K2");
  c_dc->add_option("file", g_path)->required();
  c_dc->add_flag("--lb", with_lb, "attach the bipartite-subgraph width bound");

  auto* c_cls = app.add_subcommand("classify", "boundedness of a product of classes");
  c_cls->add_option("--kind", kind_s)->required();
  c_cls->add_option("--width", width_s)->required();
  c_cls->add_option("--c1", c1_path)->required();
  c_cls->add_option("--c2", c2_path)->required();

  auto* c_sweep = app.add_subcommand("sweep", "acceptance properties over the corpus");
  c_sweep->add_option("--max-n", max_n, "corpus cap (0 = empty corpus)");
  c_sweep->add_flag("--inject-fault", inject_fault, "harness self-test");

  auto* c_link = app.add_subcommand("linkage", "disjoint paths between two vertex sets");
  std::string a_set_s, b_set_s;
  c_link->add_option("--g,g", g_path)->required();
  c_link->add_option("--a", a_set_s)->required();
  c_link->add_option("--b", b_set_s)->required();
  c_link->add_option("--k", want_k)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_product) {
      auto p = product(load(g1_path), load(g2_path), product_kind_from_string(kind_s));
      ojson j{{"n", p.base.n()},
              {"m", p.base.m()},
              {"graph", encode(p.base, format_s == "g6" ? GraphFormat::Graph6
                                                        : GraphFormat::EdgeList)}};
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*c_degen) {
      out << degen_json(degeneracy_exact(load(g_path))).dump(2) << "\n";
      return 0;
    }
    if (*c_db) {
      FactorStats f1 = stats_from_list(stats1_s), f2 = stats_from_list(stats2_s);
      bool direct = product_kind_from_string(kind_s) == ProductKind::Direct;
      auto [lo, hi] = direct ? bounds_direct(f1, f2) : bounds_strong(f1, f2);
      ojson j{{"lower", lo}, {"upper", hi}};
      if (witness) {
        auto [w1, w2] = direct ? witness_direct_lower(f1, f2) : witness_strong_lower(f1, f2);
        j["witnesses"] = {{"g1", graph6_encode(w1)}, {"g2", graph6_encode(w2)}};
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*c_multi) {
      Graph g1 = load(g1_path), g2 = load(g2_path);
      MultipartitePattern p{parse_int_list(parts_s), overlay};
      ProductKind kind = product_kind_from_string(kind_s);
      int budget = pick_budget(budget_flag, kOracleAdvisory);
      ojson j;
      bool present = false;
      if (use_oracle) {
        auto e = oracle_subgraph(product(g1, g2, kind).base, p, budget);
        present = e.has_value();
        j["present"] = present;
        if (e) j["certificate"] = embedding_json(*e);
      } else if (kind == ProductKind::Cartesian) {
        auto c = decide_cartesian(g1, g2, p, budget);
        present = c.has_value();
        j["present"] = present;
        if (c) j["certificate"] = certificate_json(*c);
      } else if (kind == ProductKind::Direct) {
        auto c = decide_direct(g1, g2, p, budget);
        present = c.has_value();
        j["present"] = present;
        if (c) j["certificate"] = certificate_json(*c);
      } else {
        auto c = decide_strong(g1, g2, p, budget);
        present = c.has_value();
        j["present"] = present;
        if (c) j["certificate"] = certificate_json(*c);
      }
      out << j.dump(2) << "\n";
      return present ? 0 : 1;
    }
    if (*c_dec) {
      int budget = pick_budget(budget_flag, kTreewidthAdvisory);
      if (op_s == "lift") {
        Graph g1 = load(g1_path), g2 = load(g2_path);
        auto dec1 = exact_width(g1, WidthKind::Tree, budget).decomposition;
        out << decomposition_json(lift_product(g1, dec1, g2)).dump(2) << "\n";
      } else if (op_s == "square") {
        Graph g = load(g_path);
        auto dec = exact_width(g, WidthKind::Tree, budget).decomposition;
        out << decomposition_json(lift_square(g, dec)).dump(2) << "\n";
      } else if (op_s == "vcsub") {
        Graph g1 = load(g1_path), g2 = load(g2_path);
        std::vector<int> cover;
        vertex_cover_number(g1, &cover, std::max(16, g1.n()));
        auto dec2 = exact_width(g2, WidthKind::Tree, budget).decomposition;
        out << decomposition_json(vc_subdivision_decomp(g1, cover, g2, dec2)).dump(2) << "\n";
      } else if (op_s == "gkn") {
        auto gkn = gkn_decomposition(gkn_k, gkn_n);
        ojson j{{"factor", graph6_encode(gkn.factor)},
                {"product_n", gkn.prod.base.n()},
                {"decomposition", decomposition_json(gkn.dec)}};
        out << j.dump(2) << "\n";
      } else {
        err << "unknown decompose op: " << op_s << "\n";
        return 2;
      }
      return 0;
    }
    if (*c_width) {
      WidthKind kind = width_s == "path" ? WidthKind::Path : WidthKind::Tree;
      int budget = pick_budget(budget_flag,
                               kind == WidthKind::Tree ? kTreewidthAdvisory : kPathwidthAdvisory);
      auto res = exact_width(load(g_path), kind, budget);
      if (json_out) {
        ojson j{{"kind", width_s},
                {"value", res.value},
                {"decomposition", decomposition_json(res.decomposition)}};
        out << j.dump(2) << "\n";
      } else {
        out << res.value << "\n";
      }
      return 0;
    }
    if (*c_bounds) {
      ExactMode mode = exact_s == "force" ? ExactMode::Force
                                          : exact_s == "off" ? ExactMode::Off : ExactMode::Auto;
      auto rep = bound_engine(load(g1_path), load(g2_path),
                              product_kind_from_string(kind_s), mode);
      out << bound_report_json(rep).dump(2) << "\n";
      return 0;
    }
    if (*c_minor) {
      Graph g = load(g_path), h = load(h_path);
      int budget = pick_budget(budget_flag, kMinorHostAdvisory);
      auto m = find_minor(g, h, budget);
      ojson j{{"present", m.has_value()}};
      if (m) j["model"] = model_json(*m);
      out << j.dump(2) << "\n";
      return m ? 0 : 1;
    }
    if (*c_dll) {
      MinorModel model;
      int v = dll_number(load(g_path), &model);
      out << ojson{{"dll", v}, {"model", model_json(model)}}.dump(2) << "\n";
      return 0;
    }
    if (*c_pn) {
      std::vector<int> path;
      int budget = pick_budget(budget_flag, 16);
      int v = path_number(load(g_path), &path, budget);
      out << ojson{{"pn", v}, {"path", path}}.dump(2) << "\n";
      return 0;
    }
    if (*c_vc) {
      std::vector<int> cover;
      int budget = pick_budget(budget_flag, 16);
      int v = vertex_cover_number(load(g_path), &cover, budget);
      out << ojson{{"vc", v}, {"cover", cover}}.dump(2) << "\n";
      return 0;
    }
    if (*c_dc) {
      Graph g = load(g_path);
      auto p = double_cover(g);
      ojson j{{"n", p.base.n()}, {"m", p.base.m()}, {"graph6", graph6_encode(p.base)}};
      if (with_lb) {
        int budget = pick_budget(budget_flag, kPathwidthAdvisory);
        auto lb = bipartite_subgraph_lb(g, budget);
        j["bipartite_subgraph"] = graph6_encode(lb.subgraph);
        j["tw_lower"] = lb.tw_lower;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*c_cls) {
      auto read_flags = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open flags file: " + path);
        ojson j;
        in >> j;
        return class_flags_from_json(j);
      };
      Verdict v = classify(product_kind_from_string(kind_s),
                           width_s == "path" ? WidthKind::Path : WidthKind::Tree,
                           read_flags(c1_path), read_flags(c2_path));
      out << verdict_json(v).dump(2) << "\n";
      return 0;
    }
    if (*c_link) {
      Graph g = load(g_path);
      int budget = pick_budget(budget_flag, 32);
      auto res = find_disjoint_linkage(g, parse_int_list(a_set_s), parse_int_list(b_set_s),
                                       want_k, budget);
      ojson j{{"found", res.found}};
      if (res.found) j["paths"] = res.paths;
      else j["cut"] = res.cut;
      out << j.dump(2) << "\n";
      return res.found ? 0 : 1;
    }
    if (*c_sweep) {
      Sweep sweep{out, max_n, inject_fault};
      sweep.run();
      return sweep.failures == 0 ? 0 : 1;
    }
  } catch (const budget_error& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand handled\n";
  return 2;
}

}  // namespace prodwidth::cli
