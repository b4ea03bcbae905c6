#include "cli/curve_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "exact/errors.hpp"

namespace tropflux {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string field_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Scalar parse_length(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Scalar(Integer(v.dump(), 10));
    if (v.is_number()) throw InputError(where + ": write non-integer lengths as strings such as \"3/2\"");
    if (!v.is_string()) throw InputError(where + ": length must be a string");
    return Scalar::parse(v.get<std::string>());
}

}  // namespace

MetricGraph parse_curve(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("curve file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("curve file must hold a JSON object");

    MetricGraph g;
    if (doc.contains("variables")) {
        const json& vars = doc.at("variables");
        if (!vars.is_array()) throw InputError("\"variables\" must be an array");
        for (const auto& v : vars) {
            if (!v.is_string()) throw InputError("variable names must be strings");
            g.variables.push_back(v.get<std::string>());
        }
    }
    if (!doc.contains("vertices") || !doc.at("vertices").is_array() || doc.at("vertices").empty())
        throw InputError("\"vertices\" must be a non-empty array");
    std::set<std::string> seen;
    for (const auto& v : doc.at("vertices")) {
        if (!v.is_string()) throw InputError("vertex names must be strings");
        std::string name = v.get<std::string>();
        if (!seen.insert(name).second) throw InputError("duplicate vertex " + name);
        g.vertices.push_back(name);
    }
    if (!doc.contains("edges") || !doc.at("edges").is_array()) throw InputError("\"edges\" must be an array");
    std::set<std::string> edge_names;
    std::set<std::string> used_vars;
    for (const auto& e : doc.at("edges")) {
        if (!e.is_object()) throw InputError("each edge must be an object");
        Edge edge;
        edge.name = field_string(e, "name", "edge");
        std::string where = "edge " + edge.name;
        if (!edge_names.insert(edge.name).second) throw InputError("duplicate edge " + edge.name);
        edge.tail = g.vertex_index(field_string(e, "from", where));
        edge.head = g.vertex_index(field_string(e, "to", where));
        if (edge.tail < 0 || edge.head < 0) throw InputError(where + ": unknown endpoint");
        if (!e.contains("length")) throw InputError(where + ": missing \"length\"");
        edge.length = parse_length(e.at("length"), where);
        for (const auto& v : edge.length.variables()) used_vars.insert(v);
        g.edges.push_back(std::move(edge));
    }
    for (const auto& v : used_vars)
        if (std::find(g.variables.begin(), g.variables.end(), v) == g.variables.end()) g.variables.push_back(v);

    g.basepoint = g.vertex_index(field_string(doc, "basepoint", "curve file"));
    if (g.basepoint < 0) throw InputError("basepoint is not a listed vertex");
    if (doc.contains("basepoint2") && !doc.at("basepoint2").is_null()) {
        int b2 = g.vertex_index(field_string(doc, "basepoint2", "curve file"));
        if (b2 < 0) throw InputError("basepoint2 is not a listed vertex");
        g.basepoint2 = b2;
    }
    try {
        g.validate();
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
    return g;
}

MetricGraph load_curve(const std::string& path) {
    return parse_curve(read_file(path));
}

}  // namespace tropflux
