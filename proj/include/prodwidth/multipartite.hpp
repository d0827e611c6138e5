#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prodwidth/graph.hpp"
#include "prodwidth/products.hpp"

namespace prodwidth {

/// K_{n_1,...,n_d} plus an optional extra part of size `overlay` that is
/// turned into a clique (joined to everything, internally complete).
struct MultipartitePattern {
  std::vector<int> parts;  // each >= 1, kept in caller order
  int overlay = 0;

  int d() const { return int(parts.size()); }
  int total() const;
  void validate() const;  // throws std::invalid_argument
};

/// Injective realisation: one vertex list per part plus the overlay list.
struct Embedding {
  std::vector<std::vector<int>> parts;
  std::vector<int> overlay;
};

/// True iff `e` realises `p` as a subgraph of g (disjointness, cross
/// completeness, overlay clique + domination).
bool check_embedding(const Graph& g, const MultipartitePattern& p, const Embedding& e);

inline constexpr int kOracleAdvisory = 14;

/// Exhaustive search for the pattern as a subgraph; absence is a proof.
/// Refuses past the advisory unless `budget` is raised.
std::optional<Embedding> oracle_subgraph(const Graph& g, const MultipartitePattern& p,
                                         int budget = kOracleAdvisory);

/// Clique number via the oracle on the all-ones pattern.
int clique_number(const Graph& g, int budget = 64);

// --- cartesian product -----------------------------------------------------

struct InFactorCertificate {
  int factor = 1;  // 1 or 2
  Embedding embedding;
};
struct K22Certificate {
  std::pair<int, int> edge1;  // edge of G1
  std::pair<int, int> edge2;  // edge of G2
};
struct StarCertificate {
  int s = 0;
  int center1 = 0, center2 = 0;       // star centre (center1, center2)
  std::vector<int> leaves1, leaves2;  // leaves stepping in factor 1 / factor 2
};
using CartesianCertificate = std::variant<InFactorCertificate, K22Certificate, StarCertificate>;

/// K_{n_1..n_d} in G1 [] G2: present iff the pattern fits a factor, or it is
/// K_{2,2} with an edge in each factor, or K_{1,s} with Delta1+Delta2 >= s.
std::optional<CartesianCertificate> decide_cartesian(const Graph& g1, const Graph& g2,
                                                     const MultipartitePattern& p,
                                                     int budget = kOracleAdvisory);

bool check_certificate(const Graph& g1, const Graph& g2, const MultipartitePattern& p,
                       const CartesianCertificate& c);

// --- direct product --------------------------------------------------------

struct DirectCertificate {
  std::vector<int> a, b;  // positive, n_i <= a_i * b_i
  Embedding in_g1, in_g2;
};

std::optional<DirectCertificate> decide_direct(const Graph& g1, const Graph& g2,
                                               const MultipartitePattern& p,
                                               int budget = kOracleAdvisory);

bool check_certificate(const Graph& g1, const Graph& g2, const MultipartitePattern& p,
                       const DirectCertificate& c);

// --- strong product --------------------------------------------------------

struct StrongCertificate {
  std::vector<int> a, b, z;
  int x = 0, y = 0;
  Embedding in_g1, in_g2;  // K_{a,xbar} in G1, K_{b,ybar} in G2
};

/// Searches overlay patterns feasible in the factors in ascending x+y, then
/// lexicographic (a, b); z is the componentwise deficit, checked against
/// sum(z) <= x*y.
std::optional<StrongCertificate> decide_strong(const Graph& g1, const Graph& g2,
                                               const MultipartitePattern& p,
                                               int budget = kOracleAdvisory);

bool check_certificate(const Graph& g1, const Graph& g2, const MultipartitePattern& p,
                       const StrongCertificate& c);

// --- K_{s,t}-free corollary ------------------------------------------------

struct KstBoundResult {
  std::pair<int, int> forbidden;  // ((s-1)(Delta+1)+1, (s+t)(Delta+1))
  std::optional<std::pair<Graph, Graph>> witness;  // requires s >= 2
  std::pair<int, int> witness_pattern;             // ((s-1)(Delta+1), n)
};

/// The forbidden complete-bipartite pattern for a K_{s,t}-free factor times a
/// max-degree-Delta factor, plus the witness pair showing near-tightness.
KstBoundResult strong_kst_bound(int s, int t, int max_degree, int witness_n);

}  // namespace prodwidth
