#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "planecol/error.hpp"
#include "planecol/graph_json.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

// ---------------------------------------------------------------------------
// Configuration patterns. A pattern is a small labelled graph fragment with
// degree annotations, optional face requirements, and distinctness groups.
//   - solid vertices: every host neighbor must be the image of a shown
//     pattern neighbor (closed neighborhood);
//   - hollow vertices: host degree must lie in the declared range, which may
//     not undercut the number of shown edges;
//   - non-distinct pattern vertices may share a host vertex unless they are
//     pattern-adjacent or have a common pattern neighbor (either would force
//     a loop or a multi-edge in the host).
// ---------------------------------------------------------------------------

enum class PatternKind { Solid, Hollow };

struct PatternVertex {
    std::string name;
    PatternKind kind = PatternKind::Hollow;
    int deg_lo = 0;                 // filled from "degree"; shown-to-Delta uses shown count
    int deg_hi = 1 << 30;
    bool shown_to_delta = false;
};

struct PatternFace {
    std::vector<int> cycle;         // pattern vertex indices in boundary order
    std::set<int> anchored;         // vertices that must keep their written face-neighbors
};

struct Configuration {
    std::string name;
    bool complete = true;           // false: placeholder entry, skipped by catalogs
    std::vector<std::string> notes;
    std::vector<PatternVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;   // pattern adjacency lists
    std::vector<PatternFace> faces;
    std::vector<std::vector<int>> distinct_groups;

    int index_of(const std::string& name_) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].name == name_) return static_cast<int>(i);
        return -1;
    }
};

inline Configuration parse_configuration(const json& j) {
    Configuration cfg;
    if (!j.is_object() || j.empty())
        throw Error(ErrorCode::MalformedPattern, "configuration must be a non-empty object");
    if (j.contains("name")) cfg.name = j.at("name").get<std::string>();
    if (j.contains("notes"))
        for (const auto& n : j.at("notes")) cfg.notes.push_back(n.get<std::string>());
    if (j.contains("status")) {
        if (j.at("status").get<std::string>() != "unspecified")
            throw Error(ErrorCode::MalformedPattern, "unknown status");
        cfg.complete = false;
        return cfg;
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw Error(ErrorCode::MalformedPattern, "configuration needs vertices and edges");

    for (const auto& jv : j.at("vertices")) {
        PatternVertex pv;
        pv.name = jv.at("id").get<std::string>();
        if (cfg.index_of(pv.name) != -1)
            throw Error(ErrorCode::MalformedPattern, "duplicate vertex id: " + pv.name);
        std::string kind = jv.value("kind", "hollow");
        if (kind == "solid")
            pv.kind = PatternKind::Solid;
        else if (kind == "hollow")
            pv.kind = PatternKind::Hollow;
        else
            throw Error(ErrorCode::MalformedPattern, pv.name + ": unknown kind " + kind);
        if (jv.contains("degree")) {
            const auto& d = jv.at("degree");
            if (d.is_number_integer()) {
                pv.deg_lo = pv.deg_hi = d.get<int>();
            } else if (d.is_array() && d.size() == 2) {
                pv.deg_lo = d[0].get<int>();
                pv.deg_hi = d[1].get<int>();
            } else if (d.is_string() && d.get<std::string>() == "shown-to-Delta") {
                pv.shown_to_delta = true;
            } else {
                throw Error(ErrorCode::MalformedPattern, pv.name + ": bad degree spec");
            }
        } else {
            pv.shown_to_delta = true;  // default: at least the shown edges
        }
        cfg.vertices.push_back(std::move(pv));
    }

    cfg.adj.resize(cfg.vertices.size());
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2)
            throw Error(ErrorCode::MalformedPattern, "edge must be a pair");
        int a = cfg.index_of(je[0].get<std::string>());
        int b = cfg.index_of(je[1].get<std::string>());
        if (a < 0 || b < 0)
            throw Error(ErrorCode::MalformedPattern, "edge uses unknown vertex id");
        if (a == b) throw Error(ErrorCode::MalformedPattern, "pattern self-loop");
        for (int nb : cfg.adj[a])
            if (nb == b) throw Error(ErrorCode::MalformedPattern, "duplicate pattern edge");
        cfg.adj[a].push_back(b);
        cfg.adj[b].push_back(a);
        cfg.edges.push_back({a, b});
    }

    for (size_t i = 0; i < cfg.vertices.size(); ++i) {
        PatternVertex& pv = cfg.vertices[i];
        int shown = static_cast<int>(cfg.adj[i].size());
        if (pv.shown_to_delta) {
            pv.deg_lo = shown;
            pv.deg_hi = 1 << 30;
        } else if (pv.deg_hi < shown || pv.deg_lo < shown) {
            throw Error(ErrorCode::DegreeBelowShownEdges,
                        pv.name + ": declared degree below " + std::to_string(shown) +
                            " shown edges");
        }
        if (pv.kind == PatternKind::Solid && (pv.deg_lo != shown || pv.deg_hi != shown))
            throw Error(ErrorCode::MalformedPattern,
                        pv.name + ": solid vertex degree must equal shown edges");
    }

    if (j.contains("faces")) {
        for (const auto& jf : j.at("faces")) {
            PatternFace pf;
            for (const auto& id : jf.at("cycle")) {
                int v = cfg.index_of(id.get<std::string>());
                if (v < 0) throw Error(ErrorCode::MalformedPattern, "face uses unknown vertex");
                pf.cycle.push_back(v);
            }
            if (pf.cycle.size() < 3)
                throw Error(ErrorCode::MalformedPattern, "face cycle too short");
            if (jf.contains("anchored"))
                for (const auto& id : jf.at("anchored")) {
                    int v = cfg.index_of(id.get<std::string>());
                    if (v < 0 ||
                        std::find(pf.cycle.begin(), pf.cycle.end(), v) == pf.cycle.end())
                        throw Error(ErrorCode::MalformedPattern,
                                    "anchored vertex not on face cycle");
                    pf.anchored.insert(v);
                }
            // Consecutive cycle vertices must be pattern edges (the closing
            // pair included), so the face requirement is structurally sound.
            for (size_t t = 0; t < pf.cycle.size(); ++t) {
                int a = pf.cycle[t], b = pf.cycle[(t + 1) % pf.cycle.size()];
                if (std::find(cfg.adj[a].begin(), cfg.adj[a].end(), b) == cfg.adj[a].end())
                    throw Error(ErrorCode::MalformedPattern,
                                "face cycle uses a non-edge of the pattern");
            }
            cfg.faces.push_back(std::move(pf));
        }
    }

    if (j.contains("distinct")) {
        for (const auto& jg : j.at("distinct")) {
            std::vector<int> grp;
            for (const auto& id : jg) {
                int v = cfg.index_of(id.get<std::string>());
                if (v < 0)
                    throw Error(ErrorCode::MalformedPattern, "distinct uses unknown vertex");
                grp.push_back(v);
            }
            cfg.distinct_groups.push_back(std::move(grp));
        }
    }
    return cfg;
}

inline Configuration load_configuration_file(const std::string& path) {
    return parse_configuration(load_json_file(path));
}

// ---------------------------------------------------------------------------
// Matching.
// ---------------------------------------------------------------------------

namespace detail {

inline bool may_coincide(const Configuration& cfg, int i, int j) {
    for (int nb : cfg.adj[i]) {
        if (nb == j) return false;  // pattern-adjacent: would need a loop
        for (int nb2 : cfg.adj[j])
            if (nb == nb2) return false;  // common neighbor: would need a multi-edge
    }
    for (const auto& grp : cfg.distinct_groups) {
        bool has_i = std::find(grp.begin(), grp.end(), i) != grp.end();
        bool has_j = std::find(grp.begin(), grp.end(), j) != grp.end();
        if (has_i && has_j) return false;
    }
    return true;
}

// A host face realizes a pattern face when the boundary walk is a cyclic
// arrangement of the image sequence. Faces of length != 4 must realize the
// written cyclic order (up to rotation/reflection); 4-faces may permute the
// boundary except that anchored vertices keep their two written neighbors.
inline bool face_realized(const Configuration& cfg, const PatternFace& pf,
                          const std::vector<Vertex>& img, const Face& f) {
    const size_t k = pf.cycle.size();
    if (f.walk.size() != k) return false;
    std::vector<Vertex> want;
    for (int pv : pf.cycle) want.push_back(img[pv]);
    {
        std::vector<Vertex> a = want, b = f.walk;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    if (k != 4) {
        for (int dir : {1, -1})
            for (size_t off = 0; off < k; ++off) {
                bool ok = true;
                for (size_t t = 0; t < k && ok; ++t) {
                    long idx = (static_cast<long>(off) + dir * static_cast<long>(t)) %
                               static_cast<long>(k);
                    if (idx < 0) idx += k;
                    ok = f.walk[static_cast<size_t>(idx)] == want[t];
                }
                if (ok) return true;
            }
        return false;
    }
    // 4-face: try all bijections between walk positions and cycle positions.
    std::vector<int> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (size_t t = 0; t < 4 && ok; ++t)
            ok = f.walk[perm[t]] == want[t];
        if (!ok) continue;
        for (int av : pf.anchored) {
            size_t t = 0;
            while (pf.cycle[t] != av) ++t;
            Vertex prev = img[pf.cycle[(t + 3) % 4]], next = img[pf.cycle[(t + 1) % 4]];
            size_t p = static_cast<size_t>(perm[t]);
            Vertex wprev = f.walk[(p + 3) % 4], wnext = f.walk[(p + 1) % 4];
            bool keep = (wprev == prev && wnext == next) || (wprev == next && wnext == prev);
            if (!keep) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool check_full_assignment(const PlaneGraph& g, const Configuration& cfg,
                                  const std::vector<Vertex>& img) {
    for (size_t i = 0; i < cfg.vertices.size(); ++i) {
        if (cfg.vertices[i].kind != PatternKind::Solid) continue;
        // Closed neighborhood: every host neighbor is an image of a shown
        // pattern neighbor.
        std::set<Vertex> allowed;
        for (int nb : cfg.adj[i]) allowed.insert(img[nb]);
        for (Vertex u : g.neighbors(img[i]))
            if (!allowed.count(u)) return false;
    }
    for (const PatternFace& pf : cfg.faces) {
        bool found = false;
        for (const Face& f : g.faces())
            if (face_realized(cfg, pf, img, f)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace detail

// All assignments of pattern vertices to host vertices satisfying the
// configuration, as vectors indexed by pattern vertex order; sorted
// lexicographically, duplicates (identical assignments) removed.
inline std::vector<std::vector<Vertex>> find_configuration_matches(const PlaneGraph& g,
                                                                   const Configuration& cfg) {
    if (!cfg.complete)
        throw Error(ErrorCode::MalformedPattern, cfg.name + ": configuration is unspecified");
    const int k = static_cast<int>(cfg.vertices.size());

    // Assignment order: start at the busiest pattern vertex, then always
    // extend next to a vertex with the most already-placed neighbors.
    std::vector<int> order;
    {
        std::vector<bool> placed(k, false);
        int best = 0;
        for (int i = 1; i < k; ++i)
            if (cfg.adj[i].size() > cfg.adj[best].size()) best = i;
        order.push_back(best);
        placed[best] = true;
        while (static_cast<int>(order.size()) < k) {
            int pick = -1, pick_score = -1;
            for (int i = 0; i < k; ++i) {
                if (placed[i]) continue;
                int score = 0;
                for (int nb : cfg.adj[i])
                    if (placed[nb]) ++score;
                if (score > pick_score) {
                    pick = i;
                    pick_score = score;
                }
            }
            order.push_back(pick);
            placed[pick] = true;
        }
    }

    std::set<std::vector<Vertex>> results;
    std::vector<Vertex> img(k, -1);

    auto degree_ok = [&](int pv, Vertex h) {
        const PatternVertex& p = cfg.vertices[pv];
        return g.degree(h) >= p.deg_lo && g.degree(h) <= p.deg_hi;
    };

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == order.size()) {
            if (detail::check_full_assignment(g, cfg, img)) results.insert(img);
            return;
        }
        int pv = order[pos];
        for (Vertex h = 0; h < g.n(); ++h) {
            if (!degree_ok(pv, h)) continue;
            bool ok = true;
            for (int nb : cfg.adj[pv]) {
                if (img[nb] < 0) continue;
                if (!g.has_edge(h, img[nb])) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                for (int j = 0; j < k && ok; ++j) {
                    if (img[j] < 0 || j == pv) continue;
                    if (img[j] == h && !detail::may_coincide(cfg, pv, j)) ok = false;
                }
            if (!ok) continue;
            img[pv] = h;
            rec(pos + 1);
            img[pv] = -1;
        }
    };
    rec(0);
    return {results.begin(), results.end()};
}

// Loads every complete configuration <dir>/H*.json in lexicographic filename
// order; placeholders (status: unspecified) are skipped.
inline std::vector<Configuration> load_configuration_catalog(
    const std::vector<std::string>& paths) {
    std::vector<Configuration> out;
    for (const auto& p : paths) {
        Configuration c = load_configuration_file(p);
        if (c.complete) out.push_back(std::move(c));
    }
    return out;
}

} // namespace planecol
