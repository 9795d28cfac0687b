#pragma once

#include <string>

#include <json.hpp>

#include "motzeta/artinl/artin.hpp"
#include "motzeta/bunstack/bun.hpp"
#include "motzeta/check.hpp"
#include "motzeta/curvezeta/zeta.hpp"
#include "motzeta/graphzeta/catalog.hpp"
#include "motzeta/graphzeta/count.hpp"
#include "motzeta/k0ring/k0.hpp"
#include "motzeta/motzeta/motive.hpp"
#include "motzeta/periods/periods.hpp"

// JSON documents for every input type. Readers throw SchemaError with the
// offending path ("$.edges[2]") on any malformed or inconsistent document.
// A source string is "builtin:NAME", inline JSON starting with '{', or a
// file path.
namespace motzeta::io {

using Json = nlohmann::ordered_json;

Json load_document(const std::string& source);

graph::Graph graph_from_json(const Json& j);
Json to_json(const graph::Graph& g);
graph::Graph load_graph(const std::string& source);

curve::CurveData curve_from_json(const Json& j);
Json to_json(const curve::CurveData& c);
curve::CurveData load_curve(const std::string& source);

/// {"type": "unit" | "lefschetz" | "projective_space" | "elliptic" | "curve" | "mixed_tate", ...}
mot::KimuraObject kimura_from_json(const Json& j);
mot::KimuraObject load_kimura(const std::string& source);

/// A bundled name ("SL3", "G2") or {"name", "rank", "dim", "degrees", "cartan"}.
k0::RootDatumLite root_datum_from_json(const Json& j);
k0::RootDatumLite load_root_datum(const std::string& source);

artin::CharacterData group_from_json(const Json& j);
Json to_json(const artin::CharacterData& g);
artin::NamedAction action_from_json(const Json& j);
Json to_json(const artin::NamedAction& a);
artin::NamedAction load_action(const std::string& source);

Json to_json(const Verdict& v);
Json to_json(const graph::CountRecord& r);
Json to_json(const graph::FitReport& r);
Json to_json(const curve::ZetaData& z);
Json to_json(const artin::LSeries& l);
Json to_json(const bun::BunValue& b);
Json to_json(const bun::HarderResult& h);
Json to_json(const periods::McEstimate& e);

Json series_json(const std::vector<alg::BigRational>& coeffs);
Json series_json(const std::vector<k0::K0Element>& coeffs);

} // namespace motzeta::io
