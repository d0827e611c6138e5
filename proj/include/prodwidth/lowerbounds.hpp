#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "prodwidth/decomp.hpp"
#include "prodwidth/graph.hpp"
#include "prodwidth/minors.hpp"
#include "prodwidth/products.hpp"
#include "prodwidth/rational.hpp"

namespace prodwidth {

/// Pairwise touching connected vertex sets.
struct Bramble {
  std::vector<std::vector<int>> elements;
};

std::vector<std::string> validate_bramble(const Graph& g, const Bramble& b);

struct BrambleOrder {
  int order = 0;
  std::vector<int> hitting_set;
};

inline constexpr int kBrambleAdvisory = 20;

/// Exact minimum hitting set by branch and bound (unhit element with the
/// fewest vertices first, disjoint-elements lower bound).
BrambleOrder bramble_order(const Graph& g, const Bramble& b, bool force = false);

/// The crosses (row + column) of the l x l grid; order l.
Bramble grid_bramble(int l);

/// Elements (X, B_i) for X in the input bramble of g and branch sets B_i of
/// a clique model in h; a bramble of g (x) h of order >= t * order(input).
Bramble product_bramble(const Graph& g, const Bramble& gb, const Graph& h,
                        const MinorModel& h_clique_model);

/// A bramble of maximum order (= treewidth + 1) by exhaustive search over
/// inclusion-maximal pairwise-touching families of connected sets.
Bramble optimal_bramble(const Graph& g, int budget = 7);

/// (A,S,B) with no A-B edge and 1 <= |A|,|B| <= eps * v(G).
struct Separation {
  std::vector<int> a, s, b;
};

inline constexpr int kSeparationAdvisory = 16;

/// Minimum-order epsilon-separation by exhaustive assignment, or nullopt
/// when none exists (complete graphs).
std::optional<std::pair<int, Separation>> min_separation_order(const Graph& g, Rat eps,
                                                               int budget = kSeparationAdvisory);

/// k(n - 2k + 2) - 1 for k-connected factors with >= n vertices each.
Rat connectivity_lower_formula(int k, int n);
/// (1 - eps/beta) k n - 1; validates the hypotheses, naming the failed one.
Rat separation_lower_formula(Rat eps, Rat beta, int k, int n, int m);
/// Order cap for connected graphs from maximum degree and diameter.
long long moore_bound(int max_degree, int diam);

struct FormulaQuery {
  std::optional<std::pair<int, int>> connectivity;                 // (k, n)
  std::optional<std::tuple<Rat, Rat, int, int, int>> separation;   // eps, beta, k, n, m
  std::optional<std::pair<int, int>> moore;                        // (Delta, diameter)
};

std::vector<std::pair<std::string, Rat>> formula_lower_bounds(const FormulaQuery& q);

struct SeparationLemmaReport {
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_ok = false;
  std::optional<int> product_min_order;  // none when the product is separation-free
  Rat bound = 0;                         // (1 - eps/beta) k n
  bool inequality_holds = false;
};

/// Measures the minimum epsilon-separation order of g [] h against the
/// lemma's bound; asserts nothing when the hypotheses fail.
SeparationLemmaReport verify_separation_lemma(const Graph& g, const Graph& h, Rat eps, Rat beta,
                                              int k, int budget = kSeparationAdvisory);

/// Vertex connectivity (0 for disconnected, n-1 for complete).
int vertex_connectivity(const Graph& g);

using BoundCertificate = std::variant<std::monostate, HDecomposition, Bramble, MinorModel>;

struct BoundEntry {
  std::string name;
  std::string rule;
  bool upper = false;
  Rat value = 0;
  BoundCertificate certificate;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  std::vector<std::string> skipped;  // inapplicable bounds, with reasons
  std::optional<int> exact;

  Rat best_lower() const;
  std::optional<Rat> best_upper() const;
};

enum class ExactMode { Auto, Force, Off };

/// Evaluates every applicable bound in both factor orders with certificates
/// where the constructions exist, plus the exact width when the product is
/// within reach.
BoundReport bound_engine(const Graph& g1, const Graph& g2, ProductKind kind,
                         ExactMode exact = ExactMode::Auto);

}  // namespace prodwidth
