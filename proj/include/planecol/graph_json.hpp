#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "planecol/error.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

using json = nlohmann::ordered_json;

// Canonical on-disk graph format:
//   { "vertices": [0, 1, ...], "rotation": { "0": [nbrs in cyclic order], ... } }
// Vertex ids must be dense 0..n-1; rotation keys must cover exactly the
// vertex list. parse/serialize round-trip byte-identically.

inline std::vector<std::vector<Vertex>> rotation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("rotation"))
        throw Error(ErrorCode::MalformedInput,
                    "graph json needs \"vertices\" and \"rotation\"");
    const auto& jv = j.at("vertices");
    if (!jv.is_array()) throw Error(ErrorCode::MalformedInput, "\"vertices\" not an array");
    const int n = static_cast<int>(jv.size());
    for (int i = 0; i < n; ++i) {
        if (!jv[i].is_number_integer() || jv[i].get<int>() != i)
            throw Error(ErrorCode::MalformedInput,
                        "vertex ids must be dense integers 0..n-1 in order");
    }
    const auto& jr = j.at("rotation");
    if (!jr.is_object()) throw Error(ErrorCode::MalformedInput, "\"rotation\" not an object");
    if (static_cast<int>(jr.size()) != n)
        throw Error(ErrorCode::MalformedInput, "rotation keys must cover every vertex");
    std::vector<std::vector<Vertex>> rot(n);
    for (int v = 0; v < n; ++v) {
        const std::string key = std::to_string(v);
        if (!jr.contains(key))
            throw Error(ErrorCode::MalformedInput, "rotation missing vertex " + key);
        const auto& row = jr.at(key);
        if (!row.is_array())
            throw Error(ErrorCode::MalformedInput, "rotation[" + key + "] not an array");
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw Error(ErrorCode::MalformedInput, "rotation[" + key + "] has a non-integer");
            rot[v].push_back(x.get<int>());
        }
    }
    return rot;
}

inline json rotation_to_json(const std::vector<std::vector<Vertex>>& rot) {
    json j;
    json verts = json::array();
    for (size_t v = 0; v < rot.size(); ++v) verts.push_back(static_cast<int>(v));
    j["vertices"] = std::move(verts);
    json jr = json::object();
    for (size_t v = 0; v < rot.size(); ++v) jr[std::to_string(v)] = rot[v];
    j["rotation"] = std::move(jr);
    return j;
}

inline json graph_to_json(const PlaneGraph& g) { return rotation_to_json(g.rotation()); }

// Canonical byte form used everywhere a graph or report is written to disk.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    out << text;
}

inline PlaneGraph load_graph_file(const std::string& path, const BuildOptions& opts = {}) {
    return build_plane_graph(rotation_from_json(load_json_file(path)), opts);
}

// DOT export. attrs maps are optional per-vertex / per-edge attribute strings
// (rendered inside [...]); comments go at the top of the file.
inline std::string graph_to_dot(const PlaneGraph& g,
                                const std::map<Vertex, std::string>& vertex_attrs = {},
                                const std::map<std::pair<Vertex, Vertex>, std::string>& edge_attrs = {},
                                const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "// " << c << "\n";
    out << "graph G {\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        out << "  " << v << " [label=\"" << v << " (d=" << g.degree(v) << ")\"";
        auto it = vertex_attrs.find(v);
        if (it != vertex_attrs.end()) out << ", " << it->second;
        out << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        auto it = edge_attrs.find(e);
        if (it != edge_attrs.end()) out << " [" << it->second << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace planecol
