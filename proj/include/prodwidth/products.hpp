#pragma once

#include <string>
#include <utility>

#include "prodwidth/graph.hpp"

namespace prodwidth {

enum class ProductKind { Cartesian, Direct, Strong };

std::string to_string(ProductKind k);
ProductKind product_kind_from_string(const std::string& s);

/// A product together with its factors and the fixed vertex pairing
/// (a, v) -> a * v(G2) + v, kept so certificates are reproducible.
struct ProductGraph {
  Graph base;
  Graph g1, g2;
  ProductKind kind = ProductKind::Cartesian;

  int pair_id(int a, int v) const { return a * g2.n() + v; }
  std::pair<int, int> coords(int id) const { return {id / g2.n(), id % g2.n()}; }
};

/// Builds the cartesian/direct/strong product. Throws on a vertex-count
/// product beyond the library's search-side limit.
ProductGraph product(const Graph& g1, const Graph& g2, ProductKind kind);

/// Vertex set of the projection of `vertices` (product ids) onto factor 1 or 2.
VertexSet project(const ProductGraph& p, const VertexSet& vertices, int factor);

}  // namespace prodwidth
