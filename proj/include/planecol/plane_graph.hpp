#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "planecol/error.hpp"

namespace planecol {

using Vertex = int;

// One face of the embedding. walk lists the boundary in traversal order:
// walk[i] -> walk[i+1] (cyclically) are the darts of the face, so a bridge
// contributes twice and a cut vertex can appear more than once. degree() is
// the walk length.
struct Face {
    std::vector<Vertex> walk;
    int component = 0;

    int degree() const { return static_cast<int>(walk.size()); }
};

struct BuildOptions {
    // Record a failed per-component Euler identity instead of throwing.
    // Used for deliberately non-planar stress inputs; euler_ok() turns false.
    bool allow_nonplanar = false;
    // Accept degree-0 vertices (needed for intermediate induced subgraphs).
    // A lone vertex bounds a single face that is not materialized; edgeless
    // components are skipped by the Euler check.
    bool allow_isolated = false;
};

// Combinatorial plane graph: a rotation system (cyclic neighbor order per
// vertex) plus the faces traced from it. Immutable once built.
class PlaneGraph {
public:
    int n() const { return static_cast<int>(rotation_.size()); }
    int m() const { return m_; }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }

    const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return rotation_[v]; }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& s = sorted_adj_[u];
        return std::binary_search(s.begin(), s.end(), v);
    }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }

    // Face left of the dart u->rotation[u][i]; every boundary incidence of a
    // vertex corresponds to exactly one of its darts.
    int face_of_dart(Vertex u, int i) const { return face_of_dart_[u][i]; }

    // Face ids around v, one entry per dart (multiplicity = number of times
    // v occurs on that face's walk).
    std::vector<int> faces_at(Vertex v) const {
        std::vector<int> out;
        out.reserve(rotation_[v].size());
        for (size_t i = 0; i < rotation_[v].size(); ++i)
            out.push_back(face_of_dart_[v][static_cast<int>(i)]);
        return out;
    }

    // The two faces bordering undirected edge {u,v}: left of u->v, left of v->u.
    std::pair<int, int> faces_of_edge(Vertex u, Vertex v) const {
        return {face_of_dart_[u][index_of_neighbor(u, v)],
                face_of_dart_[v][index_of_neighbor(v, u)]};
    }

    int component_of(Vertex v) const { return component_[v]; }
    int components() const { return n_components_; }
    bool euler_ok() const { return euler_ok_; }

    // All undirected edges as (u,v) with u < v, sorted.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    int index_of_neighbor(Vertex v, Vertex u) const {
        const auto& r = rotation_[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == u) return static_cast<int>(i);
        throw Error(ErrorCode::MalformedInput,
                    "no edge " + std::to_string(v) + "-" + std::to_string(u));
    }

    friend PlaneGraph build_plane_graph(const std::vector<std::vector<Vertex>>&,
                                        const BuildOptions&);

private:
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<Vertex>> sorted_adj_;
    std::vector<std::vector<int>> face_of_dart_;
    std::vector<Face> faces_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<int> component_;
    int n_components_ = 0;
    int m_ = 0;
    int max_degree_ = 0;
    int min_degree_ = 0;
    bool euler_ok_ = true;
};

// Builds and validates a plane graph from a rotation system. Vertex ids are
// the indices 0..n-1. Throws Error with code:
//   SelfLoop              v lists itself
//   DuplicateNeighbor     v lists some u twice
//   NonSymmetricAdjacency u in rotation[v] but v not in rotation[u]
//   IsolatedVertex        degree-0 vertex (unless opts.allow_isolated)
//   EulerViolation        some component fails |V|-|E|+|F| = 2
//                         (unless opts.allow_nonplanar; then euler_ok()==false)
inline PlaneGraph build_plane_graph(const std::vector<std::vector<Vertex>>& rotation,
                                    const BuildOptions& opts = {}) {
    const int n = static_cast<int>(rotation.size());
    PlaneGraph g;
    g.rotation_ = rotation;
    g.sorted_adj_.resize(n);

    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : rotation[v]) {
            if (u < 0 || u >= n)
                throw Error(ErrorCode::MalformedInput,
                            "vertex " + std::to_string(v) + " lists unknown neighbor " +
                                std::to_string(u));
            if (u == v)
                throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(v));
        }
        auto s = rotation[v];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorCode::DuplicateNeighbor,
                        "vertex " + std::to_string(v) + " repeats a neighbor");
        g.sorted_adj_[v] = std::move(s);
        if (rotation[v].empty() && !opts.allow_isolated)
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v));
    }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : rotation[v])
            if (!g.has_edge(u, v))
                throw Error(ErrorCode::NonSymmetricAdjacency,
                            std::to_string(v) + " lists " + std::to_string(u) +
                                " but not vice versa");

    int deg_sum = 0, dmin = n ? 1 << 30 : 0, dmax = 0;
    for (Vertex v = 0; v < n; ++v) {
        int d = g.degree(v);
        deg_sum += d;
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
        for (Vertex u : rotation[v])
            if (v < u) g.edges_.emplace_back(v, u);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.m_ = deg_sum / 2;
    g.min_degree_ = dmin;
    g.max_degree_ = dmax;

    // Connected components (vertex BFS).
    g.component_.assign(n, -1);
    int nc = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (g.component_[s] != -1) continue;
        g.component_[s] = nc;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : rotation[v])
                if (g.component_[u] == -1) {
                    g.component_[u] = nc;
                    q.push(u);
                }
        }
        ++nc;
    }
    g.n_components_ = nc;

    // Face tracing: arriving at v along u->v, the walk leaves along the
    // neighbor that follows u in v's rotation. Faces are discovered in the
    // canonical dart order (vertex id, rotation index), which makes face ids
    // deterministic for a given rotation system.
    g.face_of_dart_.resize(n);
    for (Vertex v = 0; v < n; ++v)
        g.face_of_dart_[v].assign(rotation[v].size(), -1);
    for (Vertex s = 0; s < n; ++s) {
        for (int si = 0; si < g.degree(s); ++si) {
            if (g.face_of_dart_[s][si] != -1) continue;
            const int id = static_cast<int>(g.faces_.size());
            Face f;
            f.component = g.component_[s];
            Vertex u = s;
            int i = si;
            do {
                g.face_of_dart_[u][i] = id;
                f.walk.push_back(u);
                Vertex v = rotation[u][i];
                int j = g.index_of_neighbor(v, u);
                u = v;
                i = (j + 1) % g.degree(v);
            } while (!(u == s && i == si));
            g.faces_.push_back(std::move(f));
        }
    }

    // Per-component Euler identity |V|-|E|+|F| = 2 (components with at least
    // one edge; a lone vertex is its own sphere with one unmaterialized face).
    std::vector<int> vc(nc, 0), ec(nc, 0), fc(nc, 0);
    for (Vertex v = 0; v < n; ++v) vc[g.component_[v]]++;
    for (const auto& e : g.edges_) ec[g.component_[e.first]]++;
    for (const auto& f : g.faces_) fc[f.component]++;
    for (int c = 0; c < nc; ++c) {
        if (ec[c] == 0) continue;
        if (vc[c] - ec[c] + fc[c] != 2) {
            if (!opts.allow_nonplanar)
                throw Error(ErrorCode::EulerViolation,
                            "component " + std::to_string(c) + ": V-E+F = " +
                                std::to_string(vc[c] - ec[c] + fc[c]));
            g.euler_ok_ = false;
        }
    }
    return g;
}

// Induced subgraph on the vertices with keep[v] == true. The rotation system
// is filtered in place (a sub-embedding of a plane graph is plane), vertices
// are renumbered densely, and old_ids maps new -> old. Isolated leftovers are
// tolerated since deletions can strand a vertex mid-recursion.
struct InducedSubgraph {
    PlaneGraph graph;
    std::vector<Vertex> old_ids;          // new id -> old id
    std::vector<int> new_ids;             // old id -> new id or -1
};

inline InducedSubgraph induced_subgraph(const PlaneGraph& g, const std::vector<bool>& keep) {
    InducedSubgraph out;
    out.new_ids.assign(g.n(), -1);
    for (Vertex v = 0; v < g.n(); ++v)
        if (keep[v]) {
            out.new_ids[v] = static_cast<int>(out.old_ids.size());
            out.old_ids.push_back(v);
        }
    std::vector<std::vector<Vertex>> rot(out.old_ids.size());
    for (size_t nv = 0; nv < out.old_ids.size(); ++nv)
        for (Vertex u : g.neighbors(out.old_ids[nv]))
            if (keep[u]) rot[nv].push_back(out.new_ids[u]);
    BuildOptions opts;
    opts.allow_isolated = true;
    opts.allow_nonplanar = !g.euler_ok();
    out.graph = build_plane_graph(rot, opts);
    return out;
}

inline InducedSubgraph induced_subgraph(const PlaneGraph& g, const std::vector<Vertex>& keep_ids) {
    std::vector<bool> keep(g.n(), false);
    for (Vertex v : keep_ids) {
        if (v < 0 || v >= g.n())
            throw Error(ErrorCode::MalformedInput,
                        "induced_subgraph: vertex id " + std::to_string(v) + " out of range");
        keep[v] = true;
    }
    return induced_subgraph(g, keep);
}

// Degree summary of a plane graph.
struct DegreeProfile {
    std::vector<int> vertex_degree;
    int min_degree = 0;
    int max_degree = 0;
    std::map<int, int> face_degree_histogram;
    int n = 0, m = 0, f = 0, components = 0;
};

inline DegreeProfile degree_profile(const PlaneGraph& g) {
    DegreeProfile p;
    p.n = g.n();
    p.m = g.m();
    p.f = static_cast<int>(g.faces().size());
    p.components = g.components();
    p.min_degree = g.min_degree();
    p.max_degree = g.max_degree();
    p.vertex_degree.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) p.vertex_degree[v] = g.degree(v);
    for (const auto& f : g.faces()) p.face_degree_histogram[f.degree()]++;
    return p;
}

} // namespace planecol
