#include "prodwidth/classify.hpp"

#include <stdexcept>

namespace prodwidth {

ClassFlags close_flags(const ClassFlags& in, std::vector<std::string>* derivation) {
  ClassFlags f = in;
  auto note = [&](const std::string& s) {
    if (derivation) derivation->push_back(s);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    if (f.pw.bounded && !f.tw.bounded) {
      f.tw.bounded = true;
      f.tw.value = f.pw.value;
      note("pathwidth bounded => treewidth bounded");
      changed = true;
    }
    if (f.comp_order.bounded && !f.comp_cover.bounded) {
      f.comp_cover.bounded = true;
      if (f.comp_order.value) f.comp_cover.value = *f.comp_order.value;
      note("component order bounded => component cover bounded");
      changed = true;
    }
    if (f.comp_order.bounded && !f.pathnum.bounded) {
      f.pathnum.bounded = true;
      f.pathnum.value = f.comp_order.value;
      note("component order bounded => path number bounded");
      changed = true;
    }
    if (f.maxdeg.bounded && f.pathnum.bounded && !f.comp_order.bounded) {
      f.comp_order.bounded = true;  // degree/diameter order cap
      note("bounded degree + bounded path number => component order bounded");
      changed = true;
    }
    if (f.dll.bounded && f.pathnum.bounded && !f.comp_cover.bounded) {
      f.comp_cover.bounded = true;  // cover <= ceil((dll+1) pathnum / 2)
      if (f.dll.value && f.pathnum.value)
        f.comp_cover.value = int((*f.dll.value + 1LL) * *f.pathnum.value + 1) / 2;
      note("bounded legs + bounded path number => component cover bounded");
      changed = true;
    }
  }
  return f;
}

Verdict classify(ProductKind kind, WidthKind width, const ClassFlags& c1, const ClassFlags& c2) {
  if (!c1.monotone || !c2.monotone)
    throw std::invalid_argument("classify: both classes must be declared monotone");
  if (kind == ProductKind::Direct && (!c1.contains_k2 || !c2.contains_k2))
    throw std::invalid_argument("classify: direct-product theorems need K2 in both classes");

  Verdict v;
  ClassFlags f1 = close_flags(c1, &v.derivation);
  ClassFlags f2 = close_flags(c2, &v.derivation);

  auto width_flag = [&](const ClassFlags& f) { return width == WidthKind::Tree ? f.tw : f.pw; };
  const char* wname = width == WidthKind::Tree ? "treewidth" : "pathwidth";

  if (!width_flag(f1).bounded || !width_flag(f2).bounded) {
    v.bounded = false;
    v.rule = std::string("a factor class has unbounded ") + wname;
    return v;
  }
  bool order1 = f1.comp_order.bounded, order2 = f2.comp_order.bounded;
  if (kind == ProductKind::Cartesian || kind == ProductKind::Strong) {
    if (order1 || order2) {
      v.bounded = true;
      v.rule = std::string("both factors have bounded ") + wname +
               " and a factor has bounded component order";
    } else {
      v.bounded = false;
      v.rule = "both factor classes have unbounded component order";
    }
    return v;
  }
  // direct product
  if (order1 || order2) {
    v.bounded = true;
    v.rule = std::string("both factors have bounded ") + wname +
             " and a factor has bounded component order";
  } else if (f1.comp_cover.bounded && f2.maxdeg.bounded) {
    v.bounded = true;
    v.rule = std::string("both factors have bounded ") + wname +
             "; factor 1 has bounded component cover and factor 2 bounded degree";
  } else if (f2.comp_cover.bounded && f1.maxdeg.bounded) {
    v.bounded = true;
    v.rule = std::string("both factors have bounded ") + wname +
             "; factor 2 has bounded component cover and factor 1 bounded degree";
  } else {
    v.bounded = false;
    v.rule = "no component-order or cover/degree condition holds";
  }
  return v;
}

ProbeResult empirical_probe(ProductKind kind, WidthKind width,
                            const std::function<Graph(int)>& family1,
                            const std::function<Graph(int)>& family2,
                            const std::vector<int>& sizes, int budget) {
  ProbeResult out;
  for (int s : sizes) {
    ProductGraph p = product(family1(s), family2(s), kind);
    out.sizes.push_back(s);
    out.widths.push_back(exact_width(p.base, width, budget).value);
  }
  int run = 1;
  for (size_t i = 1; i < out.widths.size(); i++) {
    run = out.widths[i] > out.widths[i - 1] ? run + 1 : 1;
    if (run >= 3) out.growth_detected = true;
  }
  return out;
}

bool probe_contradicts(const Verdict& v, const ProbeResult& p) {
  return v.bounded && p.growth_detected;
}

}  // namespace prodwidth
