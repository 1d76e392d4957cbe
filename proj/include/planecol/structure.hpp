#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "planecol/error.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

// ---------------------------------------------------------------------------
// Simple cycles of a fixed small length.
//
// Canonical form: the cycle starts at its smallest vertex and runs toward the
// smaller of that vertex's two cycle neighbors, so each cycle appears exactly
// once regardless of traversal direction.
// ---------------------------------------------------------------------------

inline std::vector<std::vector<Vertex>> enumerate_cycles(const PlaneGraph& g, int len) {
    std::vector<std::vector<Vertex>> out;
    if (len < 3) return out;
    std::vector<Vertex> path;
    std::vector<bool> used(g.n(), false);

    auto dfs = [&](auto&& self, Vertex start) -> void {
        Vertex v = path.back();
        if (static_cast<int>(path.size()) == len) {
            if (g.has_edge(v, start) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (Vertex u : g.neighbors(v)) {
            if (u <= start || used[u]) continue;
            // Prune: closing edge requires the last vertex to neighbor start.
            used[u] = true;
            path.push_back(u);
            self(self, start);
            path.pop_back();
            used[u] = false;
        }
    };

    for (Vertex s = 0; s < g.n(); ++s) {
        path.assign(1, s);
        used[s] = true;
        dfs(dfs, s);
        used[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Chordal cycles: a k-cycle C plus an edge of E(G)-E(C) joining two cycle
// vertices. One witness per (cycle, chord) pair.
// ---------------------------------------------------------------------------

struct CycleWitness {
    std::vector<Vertex> cycle;        // canonical form
    std::pair<Vertex, Vertex> chord;  // a < b

    bool operator<(const CycleWitness& o) const {
        if (cycle != o.cycle) return cycle < o.cycle;
        return chord < o.chord;
    }
    bool operator==(const CycleWitness& o) const {
        return cycle == o.cycle && chord == o.chord;
    }
};

// Only the lengths the class definition constrains are supported.
inline std::vector<CycleWitness> find_chordal_cycles(const PlaneGraph& g, int len) {
    if (len != 4 && len != 6)
        throw Error(ErrorCode::UnsupportedLength,
                    "chordal scan supports lengths 4 and 6, got " + std::to_string(len));
    std::vector<CycleWitness> out;
    for (const auto& cyc : enumerate_cycles(g, len)) {
        for (int i = 0; i < len; ++i) {
            for (int j = i + 1; j < len; ++j) {
                const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                if (consecutive) continue;
                Vertex a = cyc[i], b = cyc[j];
                if (!g.has_edge(a, b)) continue;
                out.push_back({cyc, {std::min(a, b), std::max(a, b)}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Class membership: plane (per-component Euler identity holds) and free of
// chordal 4-cycles and chordal 6-cycles.
// ---------------------------------------------------------------------------

struct ClassReport {
    bool euler_ok = false;
    std::vector<CycleWitness> chordal4;
    std::vector<CycleWitness> chordal6;
    bool is_member = false;
};

inline ClassReport class_membership(const PlaneGraph& g) {
    ClassReport r;
    r.euler_ok = g.euler_ok();
    r.chordal4 = find_chordal_cycles(g, 4);
    r.chordal6 = find_chordal_cycles(g, 6);
    r.is_member = r.euler_ok && r.chordal4.empty() && r.chordal6.empty();
    return r;
}

// ---------------------------------------------------------------------------
// Short-cycle adjacency audit. For class members these patterns are
// impossible; the audit reports every occurrence it finds:
//   - two 3-cycles sharing an edge
//   - a 4-cycle sharing edges with two distinct 3-cycles
//   - (only when min degree >= 3) a 3-cycle sharing an edge with a 5-cycle,
//     and two 4-cycles sharing an edge
// plus the counting consequences for high-degree vertices: for d(v) >= 8,
// f3(v) + f4(v) <= (3/4) d(v) and f3(v) <= d(v)/2, where fk(v) counts
// incident k-faces by boundary occurrence.
// ---------------------------------------------------------------------------

struct AdjacencyViolation {
    std::string kind;
    std::vector<Vertex> cycle_a;
    std::vector<Vertex> cycle_b;
    Vertex vertex = -1;  // for the per-vertex counting bounds
    std::string detail;
};

struct ShortCycleAudit {
    bool min_degree_three = false;
    std::vector<AdjacencyViolation> violations;
    bool clean() const { return violations.empty(); }
};

namespace detail {
inline std::set<std::pair<Vertex, Vertex>> cycle_edges(const std::vector<Vertex>& c) {
    std::set<std::pair<Vertex, Vertex>> s;
    for (size_t i = 0; i < c.size(); ++i) {
        Vertex a = c[i], b = c[(i + 1) % c.size()];
        s.insert({std::min(a, b), std::max(a, b)});
    }
    return s;
}

inline bool share_edge(const std::set<std::pair<Vertex, Vertex>>& a,
                       const std::set<std::pair<Vertex, Vertex>>& b) {
    for (const auto& e : a)
        if (b.count(e)) return true;
    return false;
}
} // namespace detail

inline ShortCycleAudit audit_short_cycle_adjacency(const PlaneGraph& g) {
    ShortCycleAudit rep;
    rep.min_degree_three = g.n() > 0 && g.min_degree() >= 3;

    auto c3 = enumerate_cycles(g, 3);
    auto c4 = enumerate_cycles(g, 4);
    auto c5 = enumerate_cycles(g, 5);
    std::vector<std::set<std::pair<Vertex, Vertex>>> e3, e4, e5;
    for (const auto& c : c3) e3.push_back(detail::cycle_edges(c));
    for (const auto& c : c4) e4.push_back(detail::cycle_edges(c));
    for (const auto& c : c5) e5.push_back(detail::cycle_edges(c));

    for (size_t i = 0; i < c3.size(); ++i)
        for (size_t j = i + 1; j < c3.size(); ++j)
            if (detail::share_edge(e3[i], e3[j]))
                rep.violations.push_back({"adjacent-3-cycles", c3[i], c3[j], -1, ""});

    for (size_t i = 0; i < c4.size(); ++i) {
        std::vector<size_t> hits;
        for (size_t j = 0; j < c3.size(); ++j)
            if (detail::share_edge(e4[i], e3[j])) hits.push_back(j);
        if (hits.size() >= 2)
            rep.violations.push_back({"4-cycle-adjacent-to-two-3-cycles", c4[i], c3[hits[0]],
                                      -1, std::to_string(hits.size()) + " adjacent 3-cycles"});
    }

    if (rep.min_degree_three) {
        for (size_t i = 0; i < c3.size(); ++i)
            for (size_t j = 0; j < c5.size(); ++j)
                if (detail::share_edge(e3[i], e5[j]))
                    rep.violations.push_back({"3-cycle-adjacent-to-5-cycle", c3[i], c5[j], -1, ""});
        for (size_t i = 0; i < c4.size(); ++i)
            for (size_t j = i + 1; j < c4.size(); ++j)
                if (detail::share_edge(e4[i], e4[j]))
                    rep.violations.push_back({"adjacent-4-cycles", c4[i], c4[j], -1, ""});
    }

    for (Vertex v = 0; v < g.n(); ++v) {
        const int d = g.degree(v);
        if (d < 8) continue;
        int f3 = 0, f4 = 0;
        for (int fid : g.faces_at(v)) {
            int fd = g.face(fid).degree();
            if (fd == 3) ++f3;
            if (fd == 4) ++f4;
        }
        if (4 * (f3 + f4) > 3 * d)
            rep.violations.push_back({"f3+f4-exceeds-3/4-degree", {}, {}, v,
                                      "f3+f4=" + std::to_string(f3 + f4)});
        if (2 * f3 > d)
            rep.violations.push_back({"f3-exceeds-half-degree", {}, {}, v,
                                      "f3=" + std::to_string(f3)});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Face / vertex classification used by the discharging rules.
//
// Degree-vector patterns are matched against the multiset of boundary-walk
// occurrence degrees; a slot is a closed range (k exact, k+ = [k,inf),
// k- = [2,k]).
// ---------------------------------------------------------------------------

struct DegSlot {
    int lo, hi;
};

// Does some assignment of degs onto slots satisfy every slot? Sizes are <= 6,
// so backtracking over slot order is plenty.
inline bool match_degree_multiset(std::vector<int> degs, const std::vector<DegSlot>& slots) {
    if (degs.size() != slots.size()) return false;
    std::sort(degs.begin(), degs.end());
    std::vector<bool> taken(degs.size(), false);
    auto rec = [&](auto&& self, size_t si) -> bool {
        if (si == slots.size()) return true;
        int prev = -1;
        for (size_t i = 0; i < degs.size(); ++i) {
            if (taken[i] || degs[i] == prev) continue;
            if (degs[i] < slots[si].lo || degs[i] > slots[si].hi) continue;
            prev = degs[i];
            taken[i] = true;
            if (self(self, si + 1)) { taken[i] = false; return true; }
            taken[i] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

enum class VertexKind { Simple2, Special2, Simple3, Special3, Other };

inline const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Simple2: return "simple-2";
        case VertexKind::Special2: return "special-2";
        case VertexKind::Simple3: return "simple-3";
        case VertexKind::Special3: return "special-3";
        case VertexKind::Other: return "other";
    }
    return "?";
}

struct FaceProfile {
    int id = 0;
    int degree = 0;
    int component = 0;
    std::vector<int> walk_degrees;   // degree of each boundary occurrence
    bool is_special = false;         // 3-face (3,3,5+), (3,4,4), (3,4,5), (3,4,6)
    std::string special_kind;        // "(3,3,5+)" or "(3,4,4..6)"
    bool is_bad = false;             // 4-face (3,3,5,5+) or (3,4,5-,6-)
    int n2 = 0;                      // boundary occurrences of 2-vertices
    std::vector<int> adjacent_faces; // one entry per shared edge, sorted
};

struct VertexProfile {
    Vertex id = 0;
    int degree = 0;
    VertexKind kind = VertexKind::Other;
    bool bad3 = false;               // 3-vertex lying on some bad face
    int n_low3_neighbors = 0;        // neighbors of degree <= 3
    int n_simple3_neighbors = 0;
    int n_simple2_neighbors = 0;
    int f3 = 0, f4 = 0, f5 = 0;      // incident k-faces by occurrence
    std::vector<int> weakly_incident_faces; // bad faces adjacent through a bad
                                            // 3-vertex, v itself not on the face
};

struct StructureProfile {
    std::vector<FaceProfile> faces;
    std::vector<VertexProfile> vertices;
};

inline StructureProfile classify_faces_and_vertices(const PlaneGraph& g) {
    StructureProfile out;
    out.faces.resize(g.faces().size());
    out.vertices.resize(g.n());

    const std::vector<DegSlot> special_a = {{3, 3}, {3, 3}, {5, 1 << 30}};
    const std::vector<std::vector<DegSlot>> special_b = {
        {{3, 3}, {4, 4}, {4, 4}}, {{3, 3}, {4, 4}, {5, 5}}, {{3, 3}, {4, 4}, {6, 6}}};
    const std::vector<DegSlot> bad_a = {{3, 3}, {3, 3}, {5, 5}, {5, 1 << 30}};
    const std::vector<DegSlot> bad_b = {{3, 3}, {4, 4}, {2, 5}, {2, 6}};

    for (size_t fi = 0; fi < g.faces().size(); ++fi) {
        const Face& f = g.face(static_cast<int>(fi));
        FaceProfile& p = out.faces[fi];
        p.id = static_cast<int>(fi);
        p.degree = f.degree();
        p.component = f.component;
        for (Vertex v : f.walk) {
            p.walk_degrees.push_back(g.degree(v));
            if (g.degree(v) == 2) ++p.n2;
        }
        if (p.degree == 3) {
            if (match_degree_multiset(p.walk_degrees, special_a)) {
                p.is_special = true;
                p.special_kind = "(3,3,5+)";
            } else {
                for (const auto& pat : special_b)
                    if (match_degree_multiset(p.walk_degrees, pat)) {
                        p.is_special = true;
                        p.special_kind = "(3,4,4..6)";
                        break;
                    }
            }
        } else if (p.degree == 4) {
            p.is_bad = match_degree_multiset(p.walk_degrees, bad_a) ||
                       match_degree_multiset(p.walk_degrees, bad_b);
        }
    }

    // Face adjacency: one entry per shared undirected edge. A bridge borders
    // the same face on both sides and is not an adjacency.
    for (const auto& e : g.edges()) {
        auto [fa, fb] = g.faces_of_edge(e.first, e.second);
        if (fa == fb) continue;
        out.faces[fa].adjacent_faces.push_back(fb);
        out.faces[fb].adjacent_faces.push_back(fa);
    }
    for (auto& p : out.faces)
        std::sort(p.adjacent_faces.begin(), p.adjacent_faces.end());

    // First vertex pass: kind-independent fields.
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexProfile& p = out.vertices[v];
        p.id = v;
        p.degree = g.degree(v);
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) <= 3) ++p.n_low3_neighbors;
        bool on_special = false, on_bad = false;
        for (int fid : g.faces_at(v)) {
            const FaceProfile& fp = out.faces[fid];
            if (fp.degree == 3) ++p.f3;
            if (fp.degree == 4) ++p.f4;
            if (fp.degree == 5) ++p.f5;
            on_special |= fp.is_special;
            on_bad |= fp.is_bad;
        }
        if (p.degree == 2) {
            bool mid_neighbor = false;
            for (Vertex u : g.neighbors(v))
                mid_neighbor |= (g.degree(u) == 3 || g.degree(u) == 4);
            p.kind = mid_neighbor ? VertexKind::Special2 : VertexKind::Simple2;
        } else if (p.degree == 3) {
            p.kind = on_special ? VertexKind::Special3 : VertexKind::Simple3;
            p.bad3 = on_bad;
        }
    }

    // Second pass: neighbor-kind counts.
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            if (out.vertices[u].kind == VertexKind::Simple3) ++out.vertices[v].n_simple3_neighbors;
            if (out.vertices[u].kind == VertexKind::Simple2) ++out.vertices[v].n_simple2_neighbors;
        }
    }

    // Weak incidence: v is adjacent to a bad 3-vertex of bad face f and does
    // not lie on f itself. Recorded once per (v, f) pair.
    for (size_t fi = 0; fi < g.faces().size(); ++fi) {
        const FaceProfile& fp = out.faces[fi];
        if (!fp.is_bad) continue;
        const Face& f = g.face(static_cast<int>(fi));
        std::set<Vertex> on_face(f.walk.begin(), f.walk.end());
        std::set<Vertex> weak;
        for (Vertex w : f.walk) {
            if (g.degree(w) != 3) continue;
            for (Vertex v : g.neighbors(w))
                if (!on_face.count(v)) weak.insert(v);
        }
        for (Vertex v : weak)
            out.vertices[v].weakly_incident_faces.push_back(static_cast<int>(fi));
    }
    return out;
}

} // namespace planecol
