#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "planefol/bandflow.hpp"
#include "planefol/builtins.hpp"
#include "planefol/leafspace.hpp"
#include "planefol/planemap.hpp"

namespace planefol {

struct parse_error : error {
    using error::error;
};

namespace detail {

using json = nlohmann::ordered_json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) throw parse_error("unknown key '" + key + "' in " + where);
    }
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw parse_error(where + " must be an array");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw parse_error(where + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Leaf-space files (.leafspace.json)
// --------------------------------------------------------------------------

inline LeafSpaceGraph parse_leafspace(const std::string& text) {
    const auto j = detail::parse_json(text);
    if (!j.is_object()) throw parse_error("leaf-space file must be a JSON object");
    detail::reject_unknown_keys(j, {"vertices", "edges"}, "leaf-space file");
    if (!j.contains("vertices") || !j.contains("edges"))
        throw parse_error("leaf-space file needs 'vertices' and 'edges'");
    LeafSpaceGraph g;
    g.vertices = detail::string_list(j["vertices"], "'vertices'");
    if (!j["edges"].is_array()) throw parse_error("'edges' must be an array");
    for (const auto& je : j["edges"]) {
        if (!je.is_object()) throw parse_error("edge entries must be objects");
        detail::reject_unknown_keys(je, {"id", "endA", "endB"}, "edge");
        if (!je.contains("id") || !je["id"].is_string())
            throw parse_error("edge needs a string 'id'");
        LeafEdge e;
        e.id = je["id"].get<std::string>();
        e.end_a = je.contains("endA") ? detail::string_list(je["endA"], "'endA'")
                                      : std::vector<std::string>{};
        e.end_b = je.contains("endB") ? detail::string_list(je["endB"], "'endB'")
                                      : std::vector<std::string>{};
        g.edges.push_back(std::move(e));
    }
    require_valid(g);
    return g;
}

inline std::string serialize_leafspace(const LeafSpaceGraph& g) {
    detail::json j;
    j["vertices"] = g.vertices;
    j["edges"] = detail::json::array();
    for (const auto& e : g.edges) {
        detail::json je;
        je["id"] = e.id;
        je["endA"] = e.end_a;
        je["endB"] = e.end_b;
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

// Serializer used for intermediate contraction states, which may not validate.
inline std::string serialize_leafspace_unchecked(const LeafSpaceGraph& g) {
    return serialize_leafspace(g);
}

// --------------------------------------------------------------------------
// Flow-spec files (.flow.json)
// --------------------------------------------------------------------------

inline BandFlowSpec parse_flowspec(const std::string& text) {
    const auto j = detail::parse_json(text);
    if (!j.is_object()) throw parse_error("flow-spec file must be a JSON object");
    detail::reject_unknown_keys(j, {"lines", "bands"}, "flow-spec file");
    if (!j.contains("lines") || !j.contains("bands"))
        throw parse_error("flow-spec file needs 'lines' and 'bands'");
    BandFlowSpec s;
    if (!j["lines"].is_array()) throw parse_error("'lines' must be an array");
    for (const auto& jl : j["lines"]) {
        if (!jl.is_object()) throw parse_error("line entries must be objects");
        detail::reject_unknown_keys(jl, {"x", "dir"}, "line");
        if (!jl.contains("x") || !jl["x"].is_number())
            throw parse_error("line needs a numeric 'x'");
        if (!jl.contains("dir") || !jl["dir"].is_number_integer())
            throw parse_error("line needs an integer 'dir'");
        s.lines.push_back({jl["x"].get<double>(), jl["dir"].get<int>()});
    }
    if (!j["bands"].is_array()) throw parse_error("'bands' must be an array");
    for (const auto& jb : j["bands"]) {
        if (jb.is_string() && jb.get<std::string>() == "invariant") {
            s.bands.push_back(Band::invariant());
        } else if (jb.is_object() && jb.contains("transition")) {
            detail::reject_unknown_keys(jb, {"transition"}, "band");
            const auto& jt = jb["transition"];
            if (!jt.is_object()) throw parse_error("'transition' must be an object");
            detail::reject_unknown_keys(jt, {"sign"}, "transition");
            if (!jt.contains("sign") || !jt["sign"].is_number_integer())
                throw parse_error("transition needs an integer 'sign'");
            s.bands.push_back(Band::transition(jt["sign"].get<int>()));
        } else {
            throw parse_error("band must be \"invariant\" or {\"transition\":{\"sign\":...}}");
        }
    }
    auto violations = validate_flow_spec(s);
    if (!violations.empty()) throw flowspec_error(std::move(violations));
    return s;
}

inline std::string serialize_flowspec(const BandFlowSpec& s) {
    detail::json j;
    j["lines"] = detail::json::array();
    for (const auto& l : s.lines) j["lines"].push_back({{"x", l.x}, {"dir", l.dir}});
    j["bands"] = detail::json::array();
    for (const auto& b : s.bands) {
        if (b.kind == Band::Kind::Invariant)
            j["bands"].push_back("invariant");
        else
            j["bands"].push_back({{"transition", {{"sign", b.sign}}}});
    }
    return j.dump(2) + "\n";
}

// --------------------------------------------------------------------------
// Named built-in flows: "reeb", "double-reeb", "chain5", "translation:a,b".
// --------------------------------------------------------------------------

using NamedFlow = std::variant<BandFlowSpec, TranslationFlow>;

inline std::optional<NamedFlow> builtin_flow(const std::string& name) {
    if (name == "reeb") return NamedFlow{reeb_flow_spec()};
    if (name == "double-reeb") return NamedFlow{double_reeb_flow_spec()};
    if (name == "chain5") return NamedFlow{chain5_flow_spec()};
    if (name.rfind("translation:", 0) == 0) {
        const std::string args = name.substr(12);
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw parse_error("translation built-in needs two components: translation:a,b");
        try {
            const double a = std::stod(args.substr(0, comma));
            const double b = std::stod(args.substr(comma + 1));
            return NamedFlow{TranslationFlow(a, b)};
        } catch (const std::invalid_argument&) {
            throw parse_error("translation built-in needs numeric components");
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Plane-map files: JSON expression trees.
// --------------------------------------------------------------------------

inline PlaneMap parse_planemap_node(const detail::json& j) {
    if (!j.is_object() || j.size() != 1)
        throw parse_error("plane-map node must be an object with one key");
    const std::string key = j.begin().key();
    const auto& v = j.begin().value();
    if (key == "translate") {
        if (!v.is_array() || v.size() != 2) throw parse_error("'translate' needs [a, b]");
        return PlaneMap::translation(v[0].get<double>(), v[1].get<double>());
    }
    if (key == "diag") {
        if (!v.is_array() || v.size() != 2) throw parse_error("'diag' needs [u, v]");
        return PlaneMap::linear_diag(v[0].get<double>(), v[1].get<double>());
    }
    if (key == "antipodal") return PlaneMap::antipodal();
    if (key == "reflect_y") return PlaneMap::reflection_y();
    if (key == "matrix") {
        if (!v.is_array() || v.size() != 2 || !v[0].is_array() || v[0].size() != 2 ||
            !v[1].is_array() || v[1].size() != 2)
            throw parse_error("'matrix' needs [[m00, m01], [m10, m11]]");
        return PlaneMap::general(v[0][0].get<double>(), v[0][1].get<double>(),
                                 v[1][0].get<double>(), v[1][1].get<double>());
    }
    if (key == "compose") {
        if (!v.is_array()) throw parse_error("'compose' needs an array of nodes");
        std::vector<PlaneMap> parts;
        for (const auto& c : v) parts.push_back(parse_planemap_node(c));
        return PlaneMap::compose(std::move(parts));
    }
    if (key == "inverse") return PlaneMap::inverse(parse_planemap_node(v));
    throw parse_error("unknown plane-map node '" + key + "'");
}

inline PlaneMap parse_planemap(const std::string& text) {
    return parse_planemap_node(detail::parse_json(text));
}

inline detail::json planemap_to_json(const PlaneMap& m) {
    using Kind = PlaneMap::Kind;
    detail::json j;
    switch (m.kind()) {
        case Kind::Translation: j["translate"] = {m.params()[0], m.params()[1]}; break;
        case Kind::LinearDiag: j["diag"] = {m.params()[0], m.params()[1]}; break;
        case Kind::Antipodal: j["antipodal"] = detail::json::object(); break;
        case Kind::ReflectionY: j["reflect_y"] = detail::json::object(); break;
        case Kind::General2x2:
            j["matrix"] = {{m.params()[0], m.params()[1]}, {m.params()[2], m.params()[3]}};
            break;
        case Kind::Compose: {
            j["compose"] = detail::json::array();
            for (const auto& c : m.children()) j["compose"].push_back(planemap_to_json(c));
            break;
        }
        case Kind::Inverse: j["inverse"] = planemap_to_json(m.children()[0]); break;
    }
    return j;
}

inline std::string serialize_planemap(const PlaneMap& m) {
    return planemap_to_json(m).dump(2) + "\n";
}

}  // namespace planefol
