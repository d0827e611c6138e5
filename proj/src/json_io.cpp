#include "prodwidth/json_io.hpp"

#include "prodwidth/codec.hpp"
#include "prodwidth/errors.hpp"

namespace prodwidth {

ojson graph_json(const Graph& g) {
  return ojson{{"n", g.n()}, {"m", g.m()}, {"graph6", graph6_encode(g)}};
}

ojson embedding_json(const Embedding& e) {
  return ojson{{"parts", e.parts}, {"overlay", e.overlay}};
}

ojson certificate_json(const CartesianCertificate& c) {
  if (const auto* f = std::get_if<InFactorCertificate>(&c))
    return ojson{{"kind", "in-factor"},
                 {"factor", f->factor},
                 {"embedding", embedding_json(f->embedding)}};
  if (const auto* k = std::get_if<K22Certificate>(&c))
    return ojson{{"kind", "k22"},
                 {"edge1", {k->edge1.first, k->edge1.second}},
                 {"edge2", {k->edge2.first, k->edge2.second}}};
  const auto& s = std::get<StarCertificate>(c);
  return ojson{{"kind", "star"},
               {"s", s.s},
               {"center", {s.center1, s.center2}},
               {"leaves1", s.leaves1},
               {"leaves2", s.leaves2}};
}

ojson certificate_json(const DirectCertificate& c) {
  return ojson{{"kind", "direct"},
               {"a", c.a},
               {"b", c.b},
               {"in_g1", embedding_json(c.in_g1)},
               {"in_g2", embedding_json(c.in_g2)}};
}

ojson certificate_json(const StrongCertificate& c) {
  return ojson{{"kind", "strong"}, {"a", c.a},
               {"b", c.b},         {"z", c.z},
               {"x", c.x},         {"y", c.y},
               {"in_g1", embedding_json(c.in_g1)},
               {"in_g2", embedding_json(c.in_g2)}};
}

ojson degen_json(const DegenProfile& p) {
  return ojson{{"degeneracy", p.degeneracy},
               {"elimination_order", p.order},
               {"step_degrees", p.step_degrees}};
}

ojson decomposition_json(const HDecomposition& d) {
  ojson edges = ojson::array();
  for (auto [u, v] : d.host.edges()) edges.push_back({u, v});
  return ojson{{"host_n", d.host.n()},
               {"host", edges},
               {"bags", d.bags},
               {"width", d.width()}};
}

ojson bramble_json(const Bramble& b) { return ojson{{"elements", b.elements}}; }

ojson separation_json(const Separation& s) {
  return ojson{{"A", s.a}, {"S", s.s}, {"B", s.b}};
}

ojson model_json(const MinorModel& m) { return ojson{{"branch_sets", m.branch_sets}}; }

ojson grid_like_minor_json(const GridLikeMinor& g) {
  return ojson{{"paths", g.paths}, {"order", g.order}, {"model", model_json(g.model)}};
}

ojson bound_report_json(const BoundReport& r) {
  ojson entries = ojson::array();
  for (const auto& e : r.entries) {
    ojson je{{"name", e.name},
             {"rule", e.rule},
             {"kind", e.upper ? "upper" : "lower"},
             {"value", e.value.str()}};
    if (std::holds_alternative<HDecomposition>(e.certificate))
      je["certificate"] = decomposition_json(std::get<HDecomposition>(e.certificate));
    else if (std::holds_alternative<Bramble>(e.certificate))
      je["certificate"] = bramble_json(std::get<Bramble>(e.certificate));
    else if (std::holds_alternative<MinorModel>(e.certificate))
      je["certificate"] = model_json(std::get<MinorModel>(e.certificate));
    entries.push_back(std::move(je));
  }
  ojson out{{"entries", entries}, {"skipped", r.skipped}};
  out["best_lower"] = r.best_lower().str();
  if (auto up = r.best_upper()) out["best_upper"] = up->str();
  if (r.exact) out["exact"] = *r.exact;
  return out;
}

ojson verdict_json(const Verdict& v) {
  return ojson{{"bounded", v.bounded}, {"rule", v.rule}, {"derivation", v.derivation}};
}

ojson probe_json(const ProbeResult& p) {
  return ojson{{"sizes", p.sizes}, {"widths", p.widths}, {"growth", p.growth_detected}};
}

ClassFlags class_flags_from_json(const ojson& j) {
  ClassFlags f;
  auto param = [&](const char* key) {
    ClassFlags::Param p;
    if (!j.contains(key)) return p;
    const ojson& v = j.at(key);
    if (v.is_boolean()) {
      p.bounded = v.get<bool>();
    } else if (v.is_object()) {
      p.bounded = v.value("bounded", false);
      if (v.contains("value")) p.value = v.at("value").get<int>();
    } else {
      throw parse_error(std::string("class flags: field '") + key +
                        "' must be a bool or an object");
    }
    return p;
  };
  f.tw = param("tw");
  f.pw = param("pw");
  f.maxdeg = param("maxdeg");
  f.comp_order = param("comp_order");
  f.comp_cover = param("comp_cover");
  f.dll = param("dll");
  f.pathnum = param("pathnum");
  f.monotone = j.value("monotone", false);
  f.contains_k2 = j.value("contains_k2", false);
  return f;
}

}  // namespace prodwidth
