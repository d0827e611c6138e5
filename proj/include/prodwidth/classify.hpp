#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prodwidth/decomp.hpp"
#include "prodwidth/graph.hpp"
#include "prodwidth/products.hpp"

namespace prodwidth {

/// Declared boundedness flags of a graph class, one per parameter, with an
/// optional witness value. Boundedness is a declaration about the class, not
/// something inferred from members.
struct ClassFlags {
  struct Param {
    bool bounded = false;
    std::optional<int> value;
  };
  Param tw, pw, maxdeg;
  Param comp_order;  // max order of a connected component
  Param comp_cover;  // max vertex cover number of a component
  Param dll, pathnum;
  bool monotone = false;
  bool contains_k2 = false;
};

/// Closure rules derivable from the declared flags (path decompositions are
/// tree decompositions; component order caps cover/path numbers; bounded
/// degree + path number cap component order; bounded legs + path number cap
/// the cover). Applied before the product theorems; steps are recorded.
ClassFlags close_flags(const ClassFlags& in, std::vector<std::string>* derivation = nullptr);

struct Verdict {
  bool bounded = false;
  std::string rule;  // the condition that decided it
  std::vector<std::string> derivation;
};

/// Boundedness of {G1 * G2} for monotone classes under the product
/// characterisations; direct products additionally require K2 in both
/// classes. Throws when a theorem precondition is not declared.
Verdict classify(ProductKind kind, WidthKind width, const ClassFlags& c1, const ClassFlags& c2);

struct ProbeResult {
  std::vector<int> sizes;
  std::vector<int> widths;
  bool growth_detected = false;  // strictly increasing across >= 3 sizes
};

/// Exact widths of generated products along a size sweep; a sanity harness
/// that can falsify a bounded verdict but never confirm one.
ProbeResult empirical_probe(ProductKind kind, WidthKind width,
                            const std::function<Graph(int)>& family1,
                            const std::function<Graph(int)>& family2,
                            const std::vector<int>& sizes, int budget = 18);

/// True when the probe's outcome is incompatible with the verdict.
bool probe_contradicts(const Verdict& v, const ProbeResult& p);

}  // namespace prodwidth
