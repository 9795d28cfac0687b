#include <doctest.h>

#include <filesystem>

#include "motzeta/error.hpp"
#include "motzeta/io/json_io.hpp"

using namespace motzeta;
using io::Json;

namespace {

const std::filesystem::path kData = MOTZETA_DATA_DIR;

std::string data(const std::string& rel) { return (kData / rel).string(); }

// Message of the SchemaError thrown by f, or "" if none.
template <class F>
std::string schema_message(F f) {
    try {
        f();
    } catch (const SchemaError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("graph documents") {
    const auto g = io::load_graph(data("graphs/k4.json"));
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 6);
    CHECK(io::graph_from_json(io::to_json(g)) == g);
    CHECK(io::load_graph("builtin:banana3") == graph::banana(3));
    CHECK(io::load_graph(R"({"vertices": 2, "edges": [[0, 1], [0, 1]]})") == graph::banana(2));

    CHECK(schema_message([] { io::load_graph(R"({"vertices": 2, "edges": [[0, 0]]})"); }).rfind("$:", 0) == 0);
    CHECK(schema_message([] { io::load_graph(R"({"vertices": 2, "edges": [[0, 1, 2]]})"); }).find("$.edges[0]") !=
          std::string::npos);
    CHECK(schema_message([] { io::load_graph(R"({"vertices": 2, "edge": []})"); }).find("unknown key 'edge'") !=
          std::string::npos);
    CHECK(schema_message([] { io::load_graph(R"({"vertices": -1, "edges": []})"); }).find("$.vertices") !=
          std::string::npos);
    CHECK_FALSE(schema_message([] { io::load_graph("builtin:no_such_graph"); }).empty());
    CHECK_FALSE(schema_message([] { io::load_graph(data("graphs/missing.json")); }).empty());
}

TEST_CASE("property: every bundled curve survives a JSON round trip") {
    for (const auto& nc : curve::builtin_curves()) {
        CAPTURE(nc.name);
        const auto c = io::curve_from_json(io::to_json(nc.curve));
        CHECK(c.describe() == nc.curve.describe());
        CHECK(c.genus() == nc.curve.genus());
        const auto from_file = io::load_curve(data("curves/" + nc.name + ".json"));
        CHECK(curve::count_curve(from_file, 1) == curve::count_curve(nc.curve, 1));
    }
}

TEST_CASE("corrupted curve documents are schema errors") {
    CHECK(schema_message([] { io::load_curve(R"({"model": "hyperelliptic", "p": 3, "f": [0, 0, 0, 1]})"); })
              .find("singular") != std::string::npos);
    CHECK(schema_message([] { io::load_curve(R"({"model": "plane", "p": 3, "terms": [[1, 2]]})"); })
              .find("$.terms[0]") != std::string::npos);
    CHECK(schema_message([] { io::load_curve(R"({"model": "elliptic", "p": 3})"); }).find("$.model") !=
          std::string::npos);
    CHECK(schema_message([] { io::load_curve(R"({"model": "projective_line", "p": 4})"); }).rfind("$:", 0) == 0);
    CHECK(schema_message([] { io::load_curve(R"({"model": )"); }).find("invalid JSON") != std::string::npos);
    CHECK(schema_message([] { io::load_curve(R"({"model": "hyperelliptic", "p": 3, "f": ["x"]})"); })
              .find("$.f[0]") != std::string::npos);
}

TEST_CASE("Kimura object documents") {
    using mot::KimuraObject;
    CHECK(mot::zeta_mot(io::load_kimura(data("objects/p2.json"))).value ==
          mot::zeta_mot(KimuraObject::projective_space(2)).value);
    CHECK(mot::zeta_mot(io::load_kimura(data("objects/elliptic_e0_f3.json"))).value ==
          mot::zeta_mot(KimuraObject::elliptic(k0::K0Element(0))).value);
    // the curve route and the explicit elliptic numerator agree for e0_f3
    CHECK(mot::zeta_mot(io::load_kimura("builtin:e0_f3")).value ==
          mot::zeta_mot(KimuraObject::elliptic(k0::K0Element(0))).value);
    const auto mixed = io::load_kimura(data("objects/mixed_tate.json"));
    CHECK(mixed.plus().to_string() == "L^2-2*L+1");
    CHECK(mixed.odd().empty());
    const auto h1 = io::load_kimura(data("objects/p1_plus_h1.json"));
    CHECK(h1.odd().size() == 1);
    CHECK(h1.chi() == 0);
    CHECK(mot::kahn_check(io::load_kimura(data("objects/curve_g2_f3.json"))).holds);

    CHECK(schema_message([] {
              io::load_kimura(R"({"odd": [{"genus": 1, "numerator": ["1", "2"]}]})");
          }).find("$.odd[0]") != std::string::npos);
    CHECK(schema_message([] { io::load_kimura(R"({"type": "elliptic", "a": "x+"})"); }).find("$.a") !=
          std::string::npos);
    CHECK(schema_message([] { io::load_kimura(R"({"type": "sphere"})"); }).find("$.type") != std::string::npos);
}

TEST_CASE("root data documents") {
    CHECK(io::load_root_datum("SL3").dim == 8);
    const auto g2 = io::load_root_datum(data("root_data/g2.json"));
    CHECK(g2.dim == 14);
    CHECK(k0::weyl_poincare_check(g2).holds);
    CHECK_FALSE(schema_message([] { io::load_root_datum("E9"); }).empty());
    CHECK(schema_message([] {
              io::load_root_datum(R"({"rank": 2, "dim": 14, "degrees": [2, 5], "cartan": [[2, -1], [-3, 2]]})");
          }).rfind("$:", 0) == 0);
}

TEST_CASE("property: every bundled action survives a JSON round trip") {
    for (const auto& a : artin::builtin_actions()) {
        CAPTURE(a.name);
        const auto back = io::action_from_json(io::to_json(a));
        CHECK(back.group.mult == a.group.mult);
        CHECK(back.group.table == a.group.table);
        CHECK(back.action.maps.size() == a.action.maps.size());
        CHECK(back.induction.has_value() == a.induction.has_value());
        CHECK(back.inflation.has_value() == a.inflation.has_value());
        const auto from_file = io::load_action(data("actions/" + a.name + ".json"));
        CHECK(io::to_json(from_file) == io::to_json(a));
    }
}

TEST_CASE("explicit groups are rebuilt from permutations and per-element characters") {
    // S3 with its elements listed in a different order than the bundled one
    const Json j = Json::parse(R"({
      "name": "S3",
      "elements": [
        {"label": "e", "permutation": [0, 1, 2]},
        {"label": "r", "permutation": [1, 2, 0]},
        {"label": "r2", "permutation": [2, 0, 1]},
        {"label": "s", "permutation": [1, 0, 2]},
        {"label": "sr", "permutation": [0, 2, 1]},
        {"label": "sr2", "permutation": [2, 1, 0]}
      ],
      "characters": [
        {"name": "triv", "values": [1, 1, 1, 1, 1, 1]},
        {"name": "sign", "values": [1, 1, 1, -1, -1, -1]},
        {"name": "std", "values": [2, -1, -1, 0, 0, 0]}
      ]
    })");
    const auto g = io::group_from_json(j);
    CHECK(g.validate().holds);
    CHECK(g.class_count() == 3);
    CHECK(g.character(2)[g.element("r")] == -1);
    // the writer emits the regular representation, which reads back to the same table
    const auto again = io::group_from_json(io::to_json(g));
    CHECK(again.mult == g.mult);
    CHECK(again.table == g.table);

    Json bad = j;
    bad["characters"][2]["values"] = {2, -1, 0, 0, 0, 0};
    CHECK(schema_message([&] { io::group_from_json(bad); }).find("not constant on the class") != std::string::npos);
    bad = j;
    bad["characters"][2]["values"] = {3, 0, 0, 1, 1, 1};
    CHECK(schema_message([&] { io::group_from_json(bad); }).find("invalid character data") != std::string::npos);
    bad = j;
    bad["elements"][1]["permutation"] = {1, 1, 0};
    CHECK_FALSE(schema_message([&] { io::group_from_json(bad); }).empty());
}

TEST_CASE("action documents are validated") {
    auto j = io::to_json(*artin::builtin_action("s3_anharmonic_p1_f5"));
    auto swapped = j;
    std::swap(swapped["maps"]["(01)"], swapped["maps"]["(02)"]);
    CHECK(schema_message([&] { io::action_from_json(swapped); }).find("do not define an action") !=
          std::string::npos);
    auto missing = j;
    missing["maps"].erase("(12)");
    CHECK(schema_message([&] { io::action_from_json(missing); }).find("no map for element (12)") !=
          std::string::npos);
    auto not_sub = j;
    not_sub["induction"]["subgroup"] = {"e", "(012)"};
    CHECK(schema_message([&] { io::action_from_json(not_sub); }).find("$.induction.subgroup") !=
          std::string::npos);
}

TEST_CASE("result documents") {
    const auto h = bun::harder_check(curve::CurveData::projective_line(3), 2);
    CHECK(io::to_json(h).dump() == R"({"lhs":"1/16","rhs":"1/16","holds":true})");
    const auto fit = graph::polynomiality_test(graph::complete(4), graph::first_primes(10), 3);
    const auto j = io::to_json(fit);
    CHECK(j["status"] == "Polynomial");
    CHECK(j["polynomial"] == "p^5+p^3-p^2");
    CHECK(j["primes_held_out"].size() == 3);
    const auto z = io::to_json(curve::hasse_weil(*curve::builtin_curve("e0_f3")));
    CHECK(z["P"] == Json::array({"1", "0", "3"}));
}
