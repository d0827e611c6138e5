#include "prodwidth/products.hpp"

#include <stdexcept>

namespace prodwidth {

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Direct: return "direct";
    case ProductKind::Strong: return "strong";
  }
  return "?";
}

ProductKind product_kind_from_string(const std::string& s) {
  if (s == "cartesian" || s == "cart") return ProductKind::Cartesian;
  if (s == "direct" || s == "tensor") return ProductKind::Direct;
  if (s == "strong") return ProductKind::Strong;
  throw std::invalid_argument("unknown product kind: " + s);
}

ProductGraph product(const Graph& g1, const Graph& g2, ProductKind kind) {
  long long n = (long long)g1.n() * g2.n();
  if (n > 2'000'000) throw std::invalid_argument("product order exceeds the library limit");
  ProductGraph p;
  p.g1 = g1;
  p.g2 = g2;
  p.kind = kind;
  p.base = Graph(int(n));
  for (int a = 0; a < g1.n(); a++)
    for (int v = 0; v < g2.n(); v++) {
      int id = p.pair_id(a, v);
      if (kind == ProductKind::Cartesian || kind == ProductKind::Strong) {
        for (int b = g1.neighbors(a).next(a); b >= 0; b = g1.neighbors(a).next(b))
          p.base.add_edge(id, p.pair_id(b, v));
        for (int u = g2.neighbors(v).next(v); u >= 0; u = g2.neighbors(v).next(u))
          p.base.add_edge(id, p.pair_id(a, u));
      }
      if (kind == ProductKind::Direct || kind == ProductKind::Strong) {
        for (int b = g1.neighbors(a).first(); b >= 0; b = g1.neighbors(a).next(b))
          for (int u = g2.neighbors(v).first(); u >= 0; u = g2.neighbors(v).next(u)) {
            int other = p.pair_id(b, u);
            if (other > id) p.base.add_edge(id, other);
          }
      }
    }
  return p;
}

VertexSet project(const ProductGraph& p, const VertexSet& vertices, int factor) {
  if (factor != 1 && factor != 2) throw std::invalid_argument("factor must be 1 or 2");
  VertexSet out(factor == 1 ? p.g1.n() : p.g2.n());
  for (int id = vertices.first(); id >= 0; id = vertices.next(id)) {
    auto [a, v] = p.coords(id);
    out.set(factor == 1 ? a : v);
  }
  return out;
}

}  // namespace prodwidth
