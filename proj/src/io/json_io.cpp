#include "motzeta/io/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "motzeta/error.hpp"
#include "motzeta/exactalg/expr.hpp"

namespace motzeta::io {

namespace {

using alg::BigInt;
using alg::BigRational;

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw SchemaError(path + ": " + msg); }

std::string type_name(const Json& j) { return j.type_name(); }

void expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object, found " + type_name(j));
    std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
        if (!keys.count(k)) fail(path, "unknown key '" + k + "'");
}

const Json& field(const Json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) fail(path, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string child(const std::string& path, const std::string& key) { return path + "." + key; }
std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

long long get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer, found " + type_name(j));
    return j.get<long long>();
}

std::uint64_t get_unsigned(const Json& j, const std::string& path) {
    const long long v = get_int(j, path);
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::uint64_t>(v);
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string, found " + type_name(j));
    return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array, found " + type_name(j));
    return j;
}

BigRational get_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return BigRational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return alg::parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a rational string such as \"-3/4\", found " + type_name(j));
}

k0::K0Element get_k0(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return k0::K0Element(static_cast<long>(j.get<long long>()));
    const auto text = get_string(j, path);
    try {
        return alg::parse_fraction(text);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

// Runs a library constructor, turning its precondition failures into schema
// diagnostics at `path`.
template <class F>
auto guarded(const std::string& path, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

const std::string kBuiltin = "builtin:";

bool is_builtin(const std::string& source) { return source.rfind(kBuiltin, 0) == 0; }

// A nested document may itself be "builtin:NAME".
template <class T, class Builtin, class Parse>
T nested(const Json& j, const std::string& path, Builtin builtin, Parse parse) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (!is_builtin(s)) fail(path, "strings must have the form builtin:NAME");
        return guarded(path, [&] { return builtin(s.substr(kBuiltin.size())); });
    }
    return parse(j, path);
}

graph::Graph parse_graph(const Json& j, const std::string& path) {
    expect_object(j, path, {"name", "vertices", "edges"});
    const auto vertices = get_unsigned(field(j, path, "vertices"), child(path, "vertices"));
    const auto& edges = get_array(field(j, path, "edges"), child(path, "edges"));
    std::vector<graph::Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto p = child(child(path, "edges"), i);
        if (!edges[i].is_array() || edges[i].size() != 2) fail(p, "expected a pair [u, v]");
        out.emplace_back(get_unsigned(edges[i][0], child(p, 0)), get_unsigned(edges[i][1], child(p, 1)));
    }
    return guarded(path, [&] { return graph::Graph(vertices, out); });
}

graph::Graph builtin_graph(const std::string& name) {
    auto g = graph::builtin_graph(name);
    if (!g) throw PreconditionError("no bundled graph named '" + name + "'");
    return *g;
}

curve::CurveData parse_curve(const Json& j, const std::string& path) {
    expect_object(j, path, {"name", "model", "p", "f", "terms"});
    const auto model = get_string(field(j, path, "model"), child(path, "model"));
    const auto p = get_unsigned(field(j, path, "p"), child(path, "p"));
    if (model == "projective_line") return guarded(path, [&] { return curve::CurveData::projective_line(p); });
    if (model == "hyperelliptic") {
        const auto& f = get_array(field(j, path, "f"), child(path, "f"));
        std::vector<long long> coeffs;
        for (std::size_t i = 0; i < f.size(); ++i) coeffs.push_back(get_int(f[i], child(child(path, "f"), i)));
        return guarded(path, [&] { return curve::CurveData::hyperelliptic(p, coeffs); });
    }
    if (model == "plane") {
        const auto& terms = get_array(field(j, path, "terms"), child(path, "terms"));
        std::vector<curve::PlaneTerm> out;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto tp = child(child(path, "terms"), i);
            if (!terms[i].is_array() || terms[i].size() != 4) fail(tp, "expected [coef, i, j, k]");
            out.push_back({get_int(terms[i][0], child(tp, 0)), static_cast<unsigned>(get_unsigned(terms[i][1], child(tp, 1))),
                           static_cast<unsigned>(get_unsigned(terms[i][2], child(tp, 2))),
                           static_cast<unsigned>(get_unsigned(terms[i][3], child(tp, 3)))});
        }
        return guarded(path, [&] { return curve::CurveData::plane(p, out); });
    }
    fail(child(path, "model"), "expected projective_line, hyperelliptic or plane, found '" + model + "'");
}

curve::CurveData builtin_curve(const std::string& name) {
    const auto* c = curve::builtin_curve(name);
    if (!c) throw PreconditionError("no bundled curve named '" + name + "'");
    return *c;
}

mot::KimuraObject parse_kimura(const Json& j, const std::string& path) {
    using mot::KimuraObject;
    if (!j.is_object()) fail(path, "expected an object, found " + type_name(j));
    const std::string type = j.contains("type") ? get_string(j.at("type"), child(path, "type")) : "mixed_tate";
    if (type == "unit") {
        expect_object(j, path, {"type"});
        return KimuraObject::unit();
    }
    if (type == "lefschetz") {
        expect_object(j, path, {"type", "m"});
        return KimuraObject::lefschetz(static_cast<long>(get_int(field(j, path, "m"), child(path, "m"))));
    }
    if (type == "projective_space") {
        expect_object(j, path, {"type", "n"});
        const auto n = static_cast<long>(get_unsigned(field(j, path, "n"), child(path, "n")));
        return guarded(path, [&] { return KimuraObject::projective_space(n); });
    }
    if (type == "elliptic") {
        expect_object(j, path, {"type", "a"});
        return KimuraObject::elliptic(get_k0(field(j, path, "a"), child(path, "a")));
    }
    if (type == "curve") {
        expect_object(j, path, {"type", "curve"});
        const auto c = nested<curve::CurveData>(field(j, path, "curve"), child(path, "curve"), builtin_curve, parse_curve);
        return guarded(path, [&] { return KimuraObject::curve(curve::hasse_weil(c)); });
    }
    if (type != "mixed_tate") fail(child(path, "type"), "unknown object type '" + type + "'");
    expect_object(j, path, {"type", "plus", "odd"});
    k0::MixedTateClass plus;
    if (j.contains("plus")) {
        const auto& terms = get_array(j.at("plus"), child(path, "plus"));
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto tp = child(child(path, "plus"), i);
            if (!terms[i].is_array() || terms[i].size() != 2) fail(tp, "expected [exponent, multiplicity]");
            plus.add(static_cast<long>(get_int(terms[i][0], child(tp, 0))), static_cast<long>(get_int(terms[i][1], child(tp, 1))));
        }
    }
    std::vector<mot::OddGenerator> odd;
    if (j.contains("odd")) {
        const auto& gens = get_array(j.at("odd"), child(path, "odd"));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto gp = child(child(path, "odd"), i);
            expect_object(gens[i], gp, {"name", "genus", "numerator"});
            mot::OddGenerator g;
            g.name = gens[i].contains("name") ? get_string(gens[i].at("name"), child(gp, "name")) : "h1";
            g.genus = static_cast<long>(get_unsigned(field(gens[i], gp, "genus"), child(gp, "genus")));
            const auto& num = get_array(field(gens[i], gp, "numerator"), child(gp, "numerator"));
            std::vector<k0::K0Element> coeffs;
            for (std::size_t k = 0; k < num.size(); ++k) coeffs.push_back(get_k0(num[k], child(child(gp, "numerator"), k)));
            g.numerator = mot::KPoly(coeffs);
            if (g.genus < 1 || g.numerator.degree() != 2 * g.genus)
                fail(gp, "numerator must have degree 2 * genus with genus >= 1");
            odd.push_back(std::move(g));
        }
    }
    return guarded(path, [&] { return KimuraObject(plus, odd); });
}

std::vector<long> long_list(const Json& j, const std::string& path) {
    std::vector<long> out;
    const auto& a = get_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(static_cast<long>(get_int(a[i], child(path, i))));
    return out;
}

k0::RootDatumLite parse_root_datum(const Json& j, const std::string& path) {
    if (j.is_string()) {
        auto name = j.get<std::string>();
        if (is_builtin(name)) name = name.substr(kBuiltin.size());
        return guarded(path, [&] { return k0::root_datum(name); });
    }
    expect_object(j, path, {"name", "rank", "dim", "degrees", "cartan"});
    k0::RootDatumLite rd;
    rd.name = j.contains("name") ? get_string(j.at("name"), child(path, "name")) : "G";
    rd.rank = static_cast<long>(get_int(field(j, path, "rank"), child(path, "rank")));
    rd.dim = static_cast<long>(get_int(field(j, path, "dim"), child(path, "dim")));
    rd.degrees = long_list(field(j, path, "degrees"), child(path, "degrees"));
    const auto& cartan = get_array(field(j, path, "cartan"), child(path, "cartan"));
    for (std::size_t i = 0; i < cartan.size(); ++i) rd.cartan.push_back(long_list(cartan[i], child(child(path, "cartan"), i)));
    guarded(path, [&] {
        rd.validate();
        return 0;
    });
    return rd;
}

artin::CharacterData named_group(const std::string& name) {
    if (name == "Z/2") return artin::cyclic2();
    if (name == "S3") return artin::symmetric3();
    if (name == "Z/2xZ/2") return artin::klein4();
    if (name == "1") return artin::trivial_group();
    throw PreconditionError("no bundled group named '" + name + "' (expected Z/2, S3, Z/2xZ/2 or 1)");
}

artin::CharacterData parse_group(const Json& j, const std::string& path) {
    if (j.is_string()) return guarded(path, [&] { return named_group(j.get<std::string>()); });
    expect_object(j, path, {"name", "elements", "characters"});
    const auto& elements = get_array(field(j, path, "elements"), child(path, "elements"));
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto ep = child(child(path, "elements"), i);
        expect_object(elements[i], ep, {"label", "permutation"});
        labels.push_back(get_string(field(elements[i], ep, "label"), child(ep, "label")));
        std::vector<std::size_t> perm;
        for (long v : long_list(field(elements[i], ep, "permutation"), child(ep, "permutation"))) {
            if (v < 0) fail(child(ep, "permutation"), "entries must be nonnegative");
            perm.push_back(static_cast<std::size_t>(v));
        }
        perms.push_back(std::move(perm));
    }
    const std::string name = j.contains("name") ? get_string(j.at("name"), child(path, "name")) : "G";
    auto g = guarded(path, [&] { return artin::from_permutations(name, labels, perms, {}, {}); });

    const auto cp = child(path, "characters");
    const auto& chars = get_array(field(j, path, "characters"), cp);
    for (std::size_t k = 0; k < chars.size(); ++k) {
        const auto kp = child(cp, k);
        expect_object(chars[k], kp, {"name", "values"});
        g.character_names.push_back(get_string(field(chars[k], kp, "name"), child(kp, "name")));
        const auto& values = get_array(field(chars[k], kp, "values"), child(kp, "values"));
        if (values.size() != g.order()) fail(child(kp, "values"), "expected one value per element");
        std::vector<BigRational> row(g.class_count());
        std::vector<bool> seen(g.class_count(), false);
        for (std::size_t e = 0; e < values.size(); ++e) {
            const auto v = get_rational(values[e], child(child(kp, "values"), e));
            const auto c = g.class_of[e];
            if (seen[c] && row[c] != v) fail(child(kp, "values"), "not constant on the class of " + g.labels[e]);
            row[c] = v;
            seen[c] = true;
        }
        g.table.push_back(std::move(row));
    }
    const auto v = g.validate();
    if (!v.holds) fail(path, "invalid character data: " + v.detail);
    return g;
}

std::vector<std::size_t> element_list(const artin::CharacterData& g, const Json& j, const std::string& path) {
    std::vector<std::size_t> out;
    const auto& a = get_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto label = get_string(a[i], child(path, i));
        out.push_back(guarded(child(path, i), [&] { return g.element(label); }));
    }
    return out;
}

artin::ClassFunction value_list(const Json& j, const std::string& path, std::size_t expected) {
    const auto& a = get_array(j, path);
    if (a.size() != expected) fail(path, "expected " + std::to_string(expected) + " values");
    artin::ClassFunction out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_rational(a[i], child(path, i)));
    return out;
}

std::vector<artin::Automorphism> parse_maps(const artin::CharacterData& g, const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object keyed by element label");
    std::vector<artin::Automorphism> maps(g.order());
    std::vector<bool> seen(g.order(), false);
    for (const auto& [label, coeffs] : j.items()) {
        const auto p = child(path, label);
        const auto idx = guarded(p, [&] { return g.element(label); });
        const auto c = long_list(coeffs, p);
        if (c.size() != 4) fail(p, "expected [a, b, c, d]");
        maps[idx] = {c[0], c[1], c[2], c[3]};
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < g.order(); ++i)
        if (!seen[i]) fail(path, "no map for element " + g.labels[i]);
    return maps;
}

Json maps_json(const artin::CharacterData& g, const std::vector<artin::Automorphism>& maps) {
    Json out = Json::object();
    for (std::size_t i = 0; i < maps.size(); ++i)
        out[g.labels[i]] = {maps[i].a, maps[i].b, maps[i].c, maps[i].d};
    return out;
}

Json rationals(const std::vector<BigRational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(alg::to_string(x));
    return out;
}

artin::NamedAction parse_action(const Json& j, const std::string& path) {
    expect_object(j, path, {"name", "group", "curve", "maps", "induction", "inflation"});
    artin::NamedAction a;
    a.name = j.contains("name") ? get_string(j.at("name"), child(path, "name")) : "action";
    a.group = parse_group(field(j, path, "group"), child(path, "group"));
    a.action.curve = nested<curve::CurveData>(field(j, path, "curve"), child(path, "curve"), builtin_curve, parse_curve);
    a.action.maps = parse_maps(a.group, field(j, path, "maps"), child(path, "maps"));
    const auto valid = artin::validate_action(a.action, a.group);
    if (!valid.holds) fail(path, "maps do not define an action: " + valid.detail);

    if (j.contains("induction")) {
        const auto ip = child(path, "induction");
        const auto& ind = j.at("induction");
        expect_object(ind, ip, {"subgroup", "chi"});
        artin::InductionData d;
        d.subgroup = element_list(a.group, field(ind, ip, "subgroup"), child(ip, "subgroup"));
        if (!artin::is_subgroup(a.group, d.subgroup)) fail(child(ip, "subgroup"), "not a subgroup");
        d.chi = value_list(field(ind, ip, "chi"), child(ip, "chi"), d.subgroup.size());
        a.induction = std::move(d);
    }
    if (j.contains("inflation")) {
        const auto ip = child(path, "inflation");
        const auto& inf = j.at("inflation");
        expect_object(inf, ip, {"normal_subgroup", "quotient_group", "quotient_curve", "quotient_maps", "projection", "chi"});
        artin::InflationData d;
        d.normal_subgroup = element_list(a.group, field(inf, ip, "normal_subgroup"), child(ip, "normal_subgroup"));
        d.quotient_group = parse_group(field(inf, ip, "quotient_group"), child(ip, "quotient_group"));
        d.quotient_action.curve = nested<curve::CurveData>(field(inf, ip, "quotient_curve"), child(ip, "quotient_curve"),
                                                           builtin_curve, parse_curve);
        d.quotient_action.maps = parse_maps(d.quotient_group, field(inf, ip, "quotient_maps"), child(ip, "quotient_maps"));
        const auto& proj = field(inf, ip, "projection");
        const auto pp = child(ip, "projection");
        if (!proj.is_object()) fail(pp, "expected an object mapping labels to quotient labels");
        d.projection.assign(a.group.order(), 0);
        std::vector<bool> seen(a.group.order(), false);
        for (const auto& [label, image] : proj.items()) {
            const auto lp = child(pp, label);
            const auto g = guarded(lp, [&] { return a.group.element(label); });
            const auto target = get_string(image, lp);
            d.projection[g] = guarded(lp, [&] { return d.quotient_group.element(target); });
            seen[g] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) fail(pp, "no image for element " + a.group.labels[i]);
        d.chi = value_list(field(inf, ip, "chi"), child(ip, "chi"), d.quotient_group.order());
        a.inflation = std::move(d);
    }
    return a;
}

template <class T>
Json u64_list(const std::vector<T>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

} // namespace

Json load_document(const std::string& source) {
    std::string text;
    std::string where = source;
    if (!source.empty() && source.front() == '{') {
        text = source;
        where = "inline document";
    } else {
        std::ifstream in(source);
        if (!in) throw SchemaError(source + ": cannot open file");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(where + ": invalid JSON: " + e.what());
    }
}

graph::Graph graph_from_json(const Json& j) { return parse_graph(j, "$"); }

Json to_json(const graph::Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertices", g.num_vertices()}, {"edges", edges}};
}

graph::Graph load_graph(const std::string& source) {
    if (is_builtin(source)) return guarded("$", [&] { return builtin_graph(source.substr(kBuiltin.size())); });
    return graph_from_json(load_document(source));
}

curve::CurveData curve_from_json(const Json& j) { return parse_curve(j, "$"); }

Json to_json(const curve::CurveData& c) {
    Json j;
    j["model"] = c.model_name();
    j["p"] = c.p();
    if (c.model() == curve::CurveData::Model::hyperelliptic) j["f"] = c.f();
    if (c.model() == curve::CurveData::Model::plane) {
        Json terms = Json::array();
        for (const auto& t : c.plane_terms()) terms.push_back({t.coef, t.i, t.j, t.k});
        j["terms"] = terms;
    }
    return j;
}

curve::CurveData load_curve(const std::string& source) {
    if (is_builtin(source)) return guarded("$", [&] { return builtin_curve(source.substr(kBuiltin.size())); });
    return curve_from_json(load_document(source));
}

mot::KimuraObject kimura_from_json(const Json& j) { return parse_kimura(j, "$"); }

mot::KimuraObject load_kimura(const std::string& source) {
    if (is_builtin(source)) {
        // a bundled curve, read as h(X)
        const auto c = guarded("$", [&] { return builtin_curve(source.substr(kBuiltin.size())); });
        return guarded("$", [&] { return mot::KimuraObject::curve(curve::hasse_weil(c)); });
    }
    return kimura_from_json(load_document(source));
}

k0::RootDatumLite root_datum_from_json(const Json& j) { return parse_root_datum(j, "$"); }

k0::RootDatumLite load_root_datum(const std::string& source) {
    if (!source.empty() && source.front() != '{' && source.find('.') == std::string::npos)
        return parse_root_datum(Json(source), "$");
    return root_datum_from_json(load_document(source));
}

artin::CharacterData group_from_json(const Json& j) { return parse_group(j, "$"); }

Json to_json(const artin::CharacterData& g) {
    for (const char* name : {"Z/2", "S3", "Z/2xZ/2", "1"}) {
        const auto named = named_group(name);
        if (named.name == g.name && named.labels == g.labels && named.mult == g.mult && named.table == g.table &&
            named.character_names == g.character_names)
            return name;
    }
    // left regular representation: element a permutes the elements by b -> ab
    Json elements = Json::array();
    for (std::size_t a = 0; a < g.order(); ++a) elements.push_back({{"label", g.labels[a]}, {"permutation", g.mult[a]}});
    Json chars = Json::array();
    for (std::size_t k = 0; k < g.character_names.size(); ++k)
        chars.push_back({{"name", g.character_names[k]}, {"values", rationals(g.character(k))}});
    return {{"name", g.name}, {"elements", elements}, {"characters", chars}};
}

artin::NamedAction action_from_json(const Json& j) { return parse_action(j, "$"); }

Json to_json(const artin::NamedAction& a) {
    Json j;
    j["name"] = a.name;
    j["group"] = to_json(a.group);
    j["curve"] = to_json(a.action.curve);
    j["maps"] = maps_json(a.group, a.action.maps);
    if (a.induction) {
        Json sub = Json::array();
        for (auto h : a.induction->subgroup) sub.push_back(a.group.labels[h]);
        j["induction"] = {{"subgroup", sub}, {"chi", rationals(a.induction->chi)}};
    }
    if (a.inflation) {
        const auto& d = *a.inflation;
        Json normal = Json::array();
        for (auto h : d.normal_subgroup) normal.push_back(a.group.labels[h]);
        Json proj = Json::object();
        for (std::size_t g = 0; g < d.projection.size(); ++g) proj[a.group.labels[g]] = d.quotient_group.labels[d.projection[g]];
        j["inflation"] = {{"normal_subgroup", normal},
                          {"quotient_group", to_json(d.quotient_group)},
                          {"quotient_curve", to_json(d.quotient_action.curve)},
                          {"quotient_maps", maps_json(d.quotient_group, d.quotient_action.maps)},
                          {"projection", proj},
                          {"chi", rationals(d.chi)}};
    }
    return j;
}

artin::NamedAction load_action(const std::string& source) {
    if (is_builtin(source)) {
        const auto name = source.substr(kBuiltin.size());
        const auto* a = artin::builtin_action(name);
        if (!a) fail("$", "no bundled action named '" + name + "'");
        return *a;
    }
    return action_from_json(load_document(source));
}

Json to_json(const Verdict& v) { return {{"holds", v.holds}, {"detail", v.detail}}; }

Json to_json(const graph::CountRecord& r) {
    return {{"p", r.p}, {"affine", r.affine}, {"projective", r.projective}, {"kernel", r.kernel}};
}

Json to_json(const graph::FitReport& r) {
    Json j;
    j["status"] = graph::to_string(r.status);
    if (r.status == graph::FitReport::Status::polynomial) j["polynomial"] = graph::poly_in_p(r.coeffs);
    j["coefficients"] = rationals(r.coeffs);
    j["primes_used"] = u64_list(r.primes_used);
    j["primes_held_out"] = u64_list(r.primes_held_out);
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    Json counts = Json::array();
    for (const auto& c : r.counts) counts.push_back(to_json(c));
    j["counts"] = counts;
    j["note"] = r.note;
    return j;
}

Json to_json(const curve::ZetaData& z) {
    Json p = Json::array();
    for (const auto& c : z.P.coeffs()) p.push_back(alg::to_string(c));
    return {{"q", z.q}, {"genus", z.genus}, {"counts", u64_list(z.counts)}, {"P", p}, {"zeta", z.zeta().to_string("t")}};
}

Json series_json(const std::vector<BigRational>& coeffs) { return rationals(coeffs); }

Json series_json(const std::vector<k0::K0Element>& coeffs) {
    Json out = Json::array();
    for (const auto& c : coeffs) out.push_back(c.to_string("L"));
    return out;
}

Json to_json(const artin::LSeries& l) {
    return {{"character", l.character}, {"order", l.order}, {"coefficients", series_json(l.series.coeffs())}};
}

Json to_json(const bun::BunValue& b) {
    Json factors = Json::array();
    for (const auto& f : b.factors) factors.push_back(f.to_string("L"));
    return {{"group", b.group.name},
            {"genus", b.genus},
            {"prefactor", b.prefactor.to_string("L")},
            {"factors", factors},
            {"value", b.value.to_string("L")},
            {"expansion_valuation", b.series.valuation},
            {"expansion", rationals(b.series.coeffs)}};
}

Json to_json(const bun::HarderResult& h) {
    return {{"lhs", alg::to_string(h.lhs)}, {"rhs", alg::to_string(h.rhs)}, {"holds", h.holds}};
}

Json to_json(const periods::McEstimate& e) {
    Json j = {{"mean", e.mean},         {"standard_error", e.standard_error}, {"samples", e.samples},
              {"seed", e.seed},         {"non_finite", e.non_finite},         {"convention", e.convention}};
    if (!e.warning.empty()) j["warning"] = e.warning;
    return j;
}

} // namespace motzeta::io
