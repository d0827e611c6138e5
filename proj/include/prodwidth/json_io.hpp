#pragma once

#include <json.hpp>

#include "prodwidth/classify.hpp"
#include "prodwidth/decomp.hpp"
#include "prodwidth/degeneracy.hpp"
#include "prodwidth/graph.hpp"
#include "prodwidth/lowerbounds.hpp"
#include "prodwidth/minors.hpp"
#include "prodwidth/multipartite.hpp"

namespace prodwidth {

// Insertion-ordered JSON keeps CLI output byte-stable across runs.
using ojson = nlohmann::ordered_json;

ojson graph_json(const Graph& g);
ojson embedding_json(const Embedding& e);
ojson certificate_json(const CartesianCertificate& c);
ojson certificate_json(const DirectCertificate& c);
ojson certificate_json(const StrongCertificate& c);
ojson degen_json(const DegenProfile& p);
ojson decomposition_json(const HDecomposition& d);
ojson bramble_json(const Bramble& b);
ojson separation_json(const Separation& s);
ojson model_json(const MinorModel& m);
ojson grid_like_minor_json(const GridLikeMinor& g);
ojson bound_report_json(const BoundReport& r);
ojson verdict_json(const Verdict& v);
ojson probe_json(const ProbeResult& p);

/// Class-flag files: {"monotone": bool, "contains_k2": bool, and per
/// parameter either a bool or {"bounded": bool, "value": int}}.
ClassFlags class_flags_from_json(const ojson& j);

}  // namespace prodwidth
