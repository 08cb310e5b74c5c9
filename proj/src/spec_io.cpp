#include "nodal/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nodal {

using json = nlohmann::ordered_json;

std::string to_string(SpecErrorCode code) {
    switch (code) {
        case SpecErrorCode::syntax:
            return "E-SYNTAX";
        case SpecErrorCode::reference:
            return "E-REFERENCE";
        case SpecErrorCode::invariant:
            return "E-INVARIANT";
    }
    return "E-UNKNOWN";
}

SpecError::SpecError(SpecErrorCode code, std::string where, const std::string& what)
    : std::runtime_error(to_string(code) + " at " + where + ": " + what), code_(code), where_(std::move(where)) {}

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw SpecError(SpecErrorCode::syntax, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SpecError(SpecErrorCode::syntax, path + "." + key, "missing field");
    return *it;
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
    const json& v = field(obj, key, path);
    if (!v.is_array()) throw SpecError(SpecErrorCode::syntax, path + "." + key, "expected an array");
    return v;
}

std::string string_at(const json& v, const std::string& path) {
    if (!v.is_string()) throw SpecError(SpecErrorCode::syntax, path, "expected a string");
    return v.get<std::string>();
}

PointOnLine point_at(const json& v, const std::string& path) {
    try {
        return PointOnLine::parse(string_at(v, path));
    } catch (const std::invalid_argument& e) {
        throw SpecError(SpecErrorCode::syntax, path, e.what());
    }
}

BranchRef resolve(const NodalCurve& curve, const json& v, const std::string& path) {
    const std::string ref = string_at(v, path);
    const auto dot = ref.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == ref.size())
        throw SpecError(SpecErrorCode::syntax, path, "branch reference must look like 'Component.index', got '" + ref + "'");
    const auto comp = curve.component_index(ref.substr(0, dot));
    if (!comp) throw SpecError(SpecErrorCode::reference, path, "unknown component '" + ref.substr(0, dot) + "'");
    std::size_t idx = 0;
    const std::string digits = ref.substr(dot + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw SpecError(SpecErrorCode::syntax, path, "point index must be a nonnegative integer, got '" + digits + "'");
    idx = std::stoul(digits);
    if (idx >= curve.components[*comp].marked_points.size())
        throw SpecError(SpecErrorCode::reference, path,
                        "component '" + ref.substr(0, dot) + "' has no marked point " + digits);
    return {*comp, idx};
}

}  // namespace

CurveSpec parse_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SpecError(SpecErrorCode::syntax, line_column(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }

    auto curve = std::make_shared<NodalCurve>();
    const json& comps = array_field(doc, "components", "$");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path = "$.components[" + std::to_string(i) + "]";
        Component c;
        c.name = string_at(field(comps[i], "name", path), path + ".name");
        if (c.name.empty() || c.name.find('.') != std::string::npos)
            throw SpecError(SpecErrorCode::syntax, path + ".name", "component names must be nonempty and contain no '.'");
        const json& pts = array_field(comps[i], "points", path);
        for (std::size_t p = 0; p < pts.size(); ++p)
            c.marked_points.push_back(point_at(pts[p], path + ".points[" + std::to_string(p) + "]"));
        for (std::size_t p = 0; p < c.marked_points.size(); ++p)
            for (std::size_t q = 0; q < p; ++q)
                if (c.marked_points[p] == c.marked_points[q])
                    throw SpecError(SpecErrorCode::invariant, path + ".points[" + std::to_string(p) + "]",
                                    "component '" + c.name + "' lists point " + c.marked_points[p].str() + " twice");
        curve->components.push_back(std::move(c));
    }

    const json& nodes = array_field(doc, "nodes", "$");
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const std::string path = "$.nodes[" + std::to_string(n) + "]";
        NodeGluing g;
        g.a = resolve(*curve, field(nodes[n], "a", path), path + ".a");
        g.b = resolve(*curve, field(nodes[n], "b", path), path + ".b");
        curve->nodes.push_back(g);
    }

    const auto violations = validate(*curve);
    if (!violations.empty()) throw SpecError(SpecErrorCode::invariant, "$", violations.front());

    CurveSpec spec;
    spec.curve = curve;
    const json& bundle = field(doc, "bundle", "$");
    const json& md = array_field(bundle, "multidegree", "$.bundle");
    for (std::size_t i = 0; i < md.size(); ++i) {
        if (!md[i].is_number_integer())
            throw SpecError(SpecErrorCode::syntax, "$.bundle.multidegree[" + std::to_string(i) + "]", "expected an integer");
        spec.multidegree.push_back(md[i].get<long>());
    }
    if (spec.multidegree.size() != curve->components.size())
        throw SpecError(SpecErrorCode::invariant, "$.bundle.multidegree",
                        "expected " + std::to_string(curve->components.size()) + " entries, one per component");

    if (bundle.contains("gluings")) {
        const json& gl = array_field(bundle, "gluings", "$.bundle");
        for (std::size_t n = 0; n < gl.size(); ++n) {
            const std::string path = "$.bundle.gluings[" + std::to_string(n) + "]";
            Rational q;
            try {
                q = parse_rational(string_at(gl[n], path));
            } catch (const std::invalid_argument& e) {
                throw SpecError(SpecErrorCode::syntax, path, e.what());
            }
            if (q == 0) throw SpecError(SpecErrorCode::invariant, path, "gluing scalar must be nonzero");
            spec.gluings.push_back(std::move(q));
        }
        if (spec.gluings.size() != curve->nodes.size())
            throw SpecError(SpecErrorCode::invariant, "$.bundle.gluings",
                            "expected " + std::to_string(curve->nodes.size()) + " entries, one per node");
    } else {
        spec.gluings.assign(curve->nodes.size(), Rational(1));
    }
    return spec;
}

CurveSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError(SpecErrorCode::syntax, path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string serialize_spec(const CurveSpec& spec) {
    json doc;
    json comps = json::array();
    for (const auto& c : spec.curve->components) {
        json pts = json::array();
        for (const auto& p : c.marked_points) pts.push_back(p.str());
        comps.push_back({{"name", c.name}, {"points", pts}});
    }
    doc["components"] = comps;
    json nodes = json::array();
    const auto ref = [&](const BranchRef& r) {
        return spec.curve->components[r.component].name + "." + std::to_string(r.point);
    };
    for (const auto& n : spec.curve->nodes) nodes.push_back({{"a", ref(n.a)}, {"b", ref(n.b)}});
    doc["nodes"] = nodes;
    json glue = json::array();
    for (const auto& g : spec.gluings) glue.push_back(to_string(g));
    doc["bundle"] = {{"multidegree", spec.multidegree}, {"gluings", glue}};
    return doc.dump(2) + "\n";
}

}  // namespace nodal
