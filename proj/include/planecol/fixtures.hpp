#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "planecol/degeneracy.hpp"
#include "planecol/error.hpp"
#include "planecol/graph_json.hpp"
#include "planecol/plane_graph.hpp"
#include "planecol/structure.hpp"

namespace planecol {

struct Fixture {
    std::string name;
    std::string provenance;  // "generated" | "curated"
    PlaneGraph graph;
    json expected;
};

// ---------------------------------------------------------------------------
// Rotation builders.
// ---------------------------------------------------------------------------

namespace gen {

using Rotation = std::vector<std::vector<Vertex>>;

// Derives the rotation system from an oriented face list: when a face reads
// ... a, b, c ..., then c follows a in the cyclic order around b. A valid
// polyhedral face list (every directed edge in exactly one face) therefore
// reproduces exactly those faces under face tracing.
inline Rotation rotation_from_faces(int n, const std::vector<std::vector<Vertex>>& faces) {
    std::vector<std::map<Vertex, Vertex>> after(n);
    for (const auto& f : faces) {
        const size_t m = f.size();
        for (size_t t = 0; t < m; ++t) {
            Vertex a = f[t], b = f[(t + 1) % m], c = f[(t + 2) % m];
            if (after[b].count(a))
                throw Error(ErrorCode::MalformedInput, "face list reuses a directed edge");
            after[b][a] = c;
        }
    }
    Rotation rot(n);
    for (Vertex v = 0; v < n; ++v) {
        if (after[v].empty())
            throw Error(ErrorCode::MalformedInput, "vertex missing from face list");
        Vertex start = after[v].begin()->first;
        Vertex cur = start;
        do {
            rot[v].push_back(cur);
            cur = after[v].at(cur);
        } while (cur != start && rot[v].size() <= after[v].size());
        if (rot[v].size() != after[v].size())
            throw Error(ErrorCode::MalformedInput, "face list is not a single rotation cycle");
    }
    return rot;
}

inline Rotation path(int n) {
    if (n < 1) throw Error(ErrorCode::BadParams, "path needs n >= 1");
    if (n == 1) throw Error(ErrorCode::BadParams, "path of one vertex has no edges");
    Rotation rot(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0) rot[i].push_back(i - 1);
        if (i + 1 < n) rot[i].push_back(i + 1);
    }
    return rot;
}

inline Rotation cycle(int n) {
    if (n < 3) throw Error(ErrorCode::BadParams, "cycle needs n >= 3");
    Rotation rot(n);
    for (int i = 0; i < n; ++i) {
        rot[i].push_back((i + 1) % n);
        rot[i].push_back((i + n - 1) % n);
    }
    return rot;
}

// Neighbors in the planar order right, up, left, down.
inline Rotation grid(int rows, int cols) {
    if (rows < 1 || cols < 1 || static_cast<long>(rows) * cols < 2)
        throw Error(ErrorCode::BadParams, "grid needs at least 1x2");
    auto id = [&](int i, int j) { return i * cols + j; };
    Rotation rot(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            auto& r = rot[id(i, j)];
            if (j + 1 < cols) r.push_back(id(i, j + 1));
            if (i > 0) r.push_back(id(i - 1, j));
            if (j > 0) r.push_back(id(i, j - 1));
            if (i + 1 < rows) r.push_back(id(i + 1, j));
        }
    return rot;
}

// Brick-wall patch: all horizontal edges, verticals only where (i+j) is even.
inline Rotation hexpatch(int rows, int cols) {
    if (rows < 2 || cols < 2) throw Error(ErrorCode::BadParams, "hexpatch needs at least 2x2");
    auto id = [&](int i, int j) { return i * cols + j; };
    Rotation rot(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            auto& r = rot[id(i, j)];
            if (j + 1 < cols) r.push_back(id(i, j + 1));
            if (i > 0 && (i - 1 + j) % 2 == 0) r.push_back(id(i - 1, j));
            if (j > 0) r.push_back(id(i, j - 1));
            if (i + 1 < rows && (i + j) % 2 == 0) r.push_back(id(i + 1, j));
        }
    return rot;
}

inline Rotation wheel(int rim) {
    if (rim < 3) throw Error(ErrorCode::BadParams, "wheel needs rim >= 3");
    Rotation rot(rim + 1);
    for (int i = 1; i <= rim; ++i) {
        rot[0].push_back(i);
        int next = i == rim ? 1 : i + 1;
        int prev = i == 1 ? rim : i - 1;
        rot[i] = {next, 0, prev};
    }
    return rot;
}

inline Rotation prism(int n) {
    if (n < 3) throw Error(ErrorCode::BadParams, "prism needs n >= 3");
    Rotation rot(2 * n);
    for (int i = 0; i < n; ++i) {
        int next = (i + 1) % n, prev = (i + n - 1) % n;
        rot[i] = {next, n + i, prev};              // outer ring vertex
        rot[n + i] = {i, n + next, n + prev};      // inner ring vertex
    }
    return rot;
}

inline Rotation platonic(const std::string& solid) {
    if (solid == "tetrahedron") return wheel(3);
    if (solid == "cube") return prism(4);
    if (solid == "octahedron") {
        std::vector<std::vector<Vertex>> faces = {{2, 1, 0}, {3, 4, 5}};
        for (int i = 0; i < 3; ++i) {
            int i1 = (i + 1) % 3;
            faces.push_back({i, i1, 3 + i1});
            faces.push_back({i, 3 + i1, 3 + i});
        }
        return rotation_from_faces(6, faces);
    }
    if (solid == "dodecahedron") {
        auto a = [](int i) { return (i + 5) % 5; };
        std::vector<std::vector<Vertex>> faces;
        faces.push_back({4, 3, 2, 1, 0});
        faces.push_back({15, 16, 17, 18, 19});
        for (int i = 0; i < 5; ++i) {
            int i1 = a(i + 1);
            faces.push_back({i, i1, 5 + i1, 10 + i, 5 + i});
            faces.push_back({10 + i, 5 + i1, 10 + i1, 15 + i1, 15 + i});
        }
        return rotation_from_faces(20, faces);
    }
    if (solid == "icosahedron") {
        auto P = [](int i) { return 1 + (i + 5) % 5; };
        auto Q = [](int i) { return 6 + (i + 5) % 5; };
        std::vector<std::vector<Vertex>> faces;
        for (int i = 0; i < 5; ++i) {
            faces.push_back({0, P(i), P(i + 1)});
            faces.push_back({P(i + 1), P(i), Q(i)});
            faces.push_back({P(i + 1), Q(i), Q(i + 1)});
            faces.push_back({Q(i + 1), Q(i), 11});
        }
        return rotation_from_faces(12, faces);
    }
    throw Error(ErrorCode::BadParams, "unknown solid: " + solid);
}

// A (4,4,4)-triangle sharing an edge with a (4,4,4,4)-quad, padded with
// pendants so all six core vertices have degree exactly 4.
// 0,1,2 = triangle; 3,4 = far quad corners; 5 = neighbor of 0; 6..15 pendants.
inline Rotation h_gadget() {
    Rotation rot(16);
    rot[0] = {6, 5, 1, 2};      // t0: pendant, p, t1, t2
    rot[1] = {2, 0, 7, 3};      // t1: t2, t0, pendant, q1
    rot[2] = {8, 0, 1, 4};      // t2: pendant, t0, t1, q2
    rot[3] = {4, 1, 9, 10};     // q1: q2, t1, pendants
    rot[4] = {2, 3, 12, 11};    // q2: t2, q1, pendants
    rot[5] = {15, 14, 13, 0};   // p: pendants, t0
    rot[6] = {0};
    rot[7] = {1};
    rot[8] = {2};
    rot[9] = {3};
    rot[10] = {3};
    rot[11] = {4};
    rot[12] = {4};
    rot[13] = {5};
    rot[14] = {5};
    rot[15] = {5};
    return rot;
}

// Variant a: a (3,3,5,5)-face — quad 0,1,2,3 with degrees 3,5,3,5; pendants
// 4,5 hang off the 3-vertices (making them weakly incident suppliers), 6..11
// pad the 5-vertices.
// Variant b: a (3,4,4,5)-face — quad with degrees 3,4,4,5 padded likewise.
inline Rotation badface_gadget(const std::string& variant) {
    if (variant == "a") {
        Rotation rot(12);
        rot[0] = {4, 1, 3};               // u1: pendant, w1, w2
        rot[1] = {0, 6, 7, 8, 2};         // w1
        rot[2] = {5, 3, 1};               // u2: pendant, w2, w1
        rot[3] = {2, 9, 10, 11, 0};       // w2
        rot[4] = {0};
        rot[5] = {2};
        for (int p = 6; p <= 8; ++p) rot[p] = {1};
        for (int p = 9; p <= 11; ++p) rot[p] = {3};
        return rot;
    }
    if (variant == "b") {
        Rotation rot(12);
        rot[0] = {4, 1, 3};               // z1 (3): pendant, z2, z4
        rot[1] = {0, 5, 6, 2};            // z2 (4): z1, pendants, z3
        rot[2] = {1, 7, 8, 3};            // z3 (4): z2, pendants, z4
        rot[3] = {2, 9, 10, 11, 0};       // z4 (5): z3, pendants, z1
        rot[4] = {0};
        rot[5] = {1};
        rot[6] = {1};
        rot[7] = {2};
        rot[8] = {2};
        for (int p = 9; p <= 11; ++p) rot[p] = {3};
        return rot;
    }
    throw Error(ErrorCode::BadParams, "badface-gadget variant must be a or b");
}

} // namespace gen

// ---------------------------------------------------------------------------
// Generator entry point (the CLI's `generate`).
// ---------------------------------------------------------------------------

struct GenParams {
    int p1 = -1, p2 = -1;
    std::string variant;  // badface-gadget: a|b; platonic: solid name
};

inline json compute_expected(const PlaneGraph& g) {
    ClassReport cr = class_membership(g);
    DegeneracyCertificate dc = degeneracy_ordering(g);
    json e;
    e["n"] = g.n();
    e["m"] = g.m();
    e["components"] = g.components();
    e["faces"] = static_cast<int>(g.faces().size());
    e["min_degree"] = g.min_degree();
    e["max_degree"] = g.max_degree();
    e["euler_ok"] = g.euler_ok();
    e["chordal_4_cycles"] = static_cast<int>(cr.chordal4.size());
    e["chordal_6_cycles"] = static_cast<int>(cr.chordal6.size());
    e["is_member"] = cr.is_member;
    e["degeneracy"] = dc.degeneracy;
    return e;
}

inline Fixture make_fixture(const std::string& name, const std::string& provenance,
                            const gen::Rotation& rot) {
    Fixture f;
    f.name = name;
    f.provenance = provenance;
    f.graph = build_plane_graph(rot);
    f.expected = compute_expected(f.graph);
    return f;
}

inline Fixture generate_fixture(const std::string& kind, const GenParams& p = {}) {
    auto need1 = [&](const char* what) {
        if (p.p1 < 0) throw Error(ErrorCode::BadParams, std::string(what) + " needs a size");
        return p.p1;
    };
    if (kind == "path") return make_fixture("path_" + std::to_string(need1("path")), "generated",
                                            gen::path(p.p1));
    if (kind == "cycle")
        return make_fixture("cycle_" + std::to_string(need1("cycle")), "generated",
                            gen::cycle(p.p1));
    if (kind == "grid") {
        if (p.p1 < 0 || p.p2 < 0) throw Error(ErrorCode::BadParams, "grid needs rows and cols");
        return make_fixture("grid_" + std::to_string(p.p1) + "x" + std::to_string(p.p2),
                            "generated", gen::grid(p.p1, p.p2));
    }
    if (kind == "hexpatch") {
        if (p.p1 < 0 || p.p2 < 0)
            throw Error(ErrorCode::BadParams, "hexpatch needs rows and cols");
        return make_fixture("hexpatch_" + std::to_string(p.p1) + "x" + std::to_string(p.p2),
                            "generated", gen::hexpatch(p.p1, p.p2));
    }
    if (kind == "wheel")
        return make_fixture("wheel_" + std::to_string(need1("wheel")), "generated",
                            gen::wheel(p.p1));
    if (kind == "prism")
        return make_fixture("prism_" + std::to_string(need1("prism")), "generated",
                            gen::prism(p.p1));
    if (kind == "platonic") {
        if (p.variant.empty()) throw Error(ErrorCode::BadParams, "platonic needs a solid name");
        return make_fixture(p.variant, "generated", gen::platonic(p.variant));
    }
    if (kind == "h-gadget") return make_fixture("h_gadget", "generated", gen::h_gadget());
    if (kind == "badface-gadget") {
        if (p.variant.empty())
            throw Error(ErrorCode::BadParams, "badface-gadget needs --variant a|b");
        return make_fixture("badface_" + p.variant, "generated",
                            gen::badface_gadget(p.variant));
    }
    throw Error(ErrorCode::BadParams, "unknown generator kind: " + kind);
}

// ---------------------------------------------------------------------------
// Curated graphs.
// ---------------------------------------------------------------------------

namespace curated {

using gen::Rotation;

inline Rotation path_2() { return {{1}, {0}}; }

inline Rotation star(int leaves) {
    Rotation rot(leaves + 1);
    for (int i = 1; i <= leaves; ++i) {
        rot[0].push_back(i);
        rot[i] = {0};
    }
    return rot;
}

// Three legs of three vertices each from a center: 0 - (1,2,3) | (4,5,6) | (7,8,9).
inline Rotation spider() {
    Rotation rot(10);
    rot[0] = {1, 4, 7};
    for (int leg = 0; leg < 3; ++leg) {
        int a = 1 + 3 * leg, b = a + 1, c = a + 2;
        rot[a] = {0, b};
        rot[b] = {a, c};
        rot[c] = {b};
    }
    return rot;
}

// Spine 0-1-2-3-4, leaves 5,6 on 1; 7 on 2; 8,9 on 3.
inline Rotation caterpillar() {
    Rotation rot(10);
    rot[0] = {1};
    rot[1] = {0, 5, 6, 2};
    rot[2] = {1, 7, 3};
    rot[3] = {2, 8, 9, 4};
    rot[4] = {3};
    rot[5] = {1};
    rot[6] = {1};
    rot[7] = {2};
    rot[8] = {3};
    rot[9] = {3};
    return rot;
}

// K4 with every edge subdivided once; branch vertices 0..3, midpoints 4..9.
inline Rotation k4_subdiv() {
    Rotation rot(10);
    rot[0] = {4, 5, 6};
    rot[1] = {4, 8, 7};
    rot[2] = {5, 7, 9};
    rot[3] = {6, 9, 8};
    rot[4] = {0, 1};
    rot[5] = {0, 2};
    rot[6] = {0, 3};
    rot[7] = {1, 2};
    rot[8] = {1, 3};
    rot[9] = {2, 3};
    return rot;
}

// Two hubs joined by internally disjoint paths of 3, 5 and 7 edges.
inline Rotation theta_3_5_7() {
    Rotation rot(14);
    rot[0] = {8, 4, 2};
    rot[1] = {3, 7, 13};
    rot[2] = {0, 3};
    rot[3] = {2, 1};
    rot[4] = {0, 5};
    rot[5] = {4, 6};
    rot[6] = {5, 7};
    rot[7] = {6, 1};
    rot[8] = {0, 9};
    rot[9] = {8, 10};
    rot[10] = {9, 11};
    rot[11] = {10, 12};
    rot[12] = {11, 13};
    rot[13] = {12, 1};
    return rot;
}

// Two triangles sharing an edge (0,1): the smallest chordal-4-cycle witness.
inline Rotation double_triangle() {
    return {{1, 2, 3}, {2, 0, 3}, {0, 1}, {0, 1}};
}

// Two triangles sharing only the vertex 2.
inline Rotation bowtie() {
    return {{1, 2}, {0, 2}, {0, 1, 3, 4}, {2, 4}, {2, 3}};
}

// Triangle 0,1,2 with two pendants per corner: every corner has degree 4,
// so the triangle is a (4,4,4)-face.
inline Rotation triangle_pendant_4() {
    Rotation rot(9);
    rot[0] = {3, 4, 1, 2};
    rot[1] = {2, 0, 5, 6};
    rot[2] = {7, 0, 1, 8};
    for (int i = 3; i <= 4; ++i) rot[i] = {0};
    for (int i = 5; i <= 6; ++i) rot[i] = {1};
    for (int i = 7; i <= 8; ++i) rot[i] = {2};
    return rot;
}

// Triangle 0,1,2 whose three edges each border a pentagon, plus one pendant
// per corner: all corners reach degree exactly 5, so the triangle is a
// (5,5,5)-face and all its face-neighbors are 5-faces.
inline Rotation pentagon_ring() {
    Rotation rot(15);
    // pentagons: 1-3-4-5-0 over edge (0,1); 2-6-7-8-1 over (1,2); 0-9-10-11-2 over (2,0)
    rot[0] = {1, 5, 12, 9, 2};
    rot[1] = {2, 8, 13, 3, 0};
    rot[2] = {0, 11, 14, 6, 1};
    rot[3] = {1, 4};
    rot[4] = {3, 5};
    rot[5] = {4, 0};
    rot[6] = {2, 7};
    rot[7] = {6, 8};
    rot[8] = {7, 1};
    rot[9] = {0, 10};
    rot[10] = {9, 11};
    rot[11] = {10, 2};
    rot[12] = {0};
    rot[13] = {1};
    rot[14] = {2};
    return rot;
}

// A (3,6,3,6)-quad: 4-cycle u1(7) w1(8) u2(9) w2(10); w's carry four pendants
// each, u1 carries a 7-vertex path tail (0..6) and u2 a pendant, so the
// completion heuristic unravels the tail.
inline Rotation quad_3366() {
    Rotation rot(20);
    for (int i = 0; i < 5; ++i) {
        if (i > 0) rot[i].push_back(i - 1);
        rot[i].push_back(i + 1);
    }
    rot[5] = {4, 6};
    rot[6] = {5, 7};
    rot[7] = {10, 8, 6};
    rot[8] = {7, 9, 12, 13, 14, 15};
    rot[9] = {8, 10, 11};
    rot[10] = {9, 7, 16, 17, 18, 19};
    rot[11] = {9};
    for (int p = 12; p <= 15; ++p) rot[p] = {8};
    for (int p = 16; p <= 19; ++p) rot[p] = {10};
    return rot;
}

} // namespace curated

inline Fixture curated_fixture(const std::string& name) {
    using namespace curated;
    if (name == "path_2") return make_fixture(name, "curated", path_2());
    if (name == "star_6") return make_fixture(name, "curated", star(6));
    if (name == "star_7") return make_fixture(name, "curated", star(7));
    if (name == "spider") return make_fixture(name, "curated", spider());
    if (name == "caterpillar") return make_fixture(name, "curated", caterpillar());
    if (name == "k4_subdiv") return make_fixture(name, "curated", k4_subdiv());
    if (name == "theta_3_5_7") return make_fixture(name, "curated", theta_3_5_7());
    if (name == "double_triangle") return make_fixture(name, "curated", double_triangle());
    if (name == "bowtie") return make_fixture(name, "curated", bowtie());
    if (name == "triangle_pendant_4") return make_fixture(name, "curated", triangle_pendant_4());
    if (name == "pentagon_ring") return make_fixture(name, "curated", pentagon_ring());
    if (name == "quad_3366") return make_fixture(name, "curated", quad_3366());
    throw Error(ErrorCode::BadParams, "unknown curated fixture: " + name);
}

// ---------------------------------------------------------------------------
// The shipped corpus.
// ---------------------------------------------------------------------------

inline std::vector<Fixture> build_corpus() {
    std::vector<Fixture> out;
    auto gen1 = [&](const std::string& kind, int p1) {
        GenParams p;
        p.p1 = p1;
        out.push_back(generate_fixture(kind, p));
    };
    auto gen2 = [&](const std::string& kind, int p1, int p2) {
        GenParams p;
        p.p1 = p1;
        p.p2 = p2;
        out.push_back(generate_fixture(kind, p));
    };
    auto genv = [&](const std::string& kind, const std::string& variant) {
        GenParams p;
        p.variant = variant;
        out.push_back(generate_fixture(kind, p));
    };
    gen1("path", 4);
    gen1("path", 7);
    gen1("path", 10);
    gen1("cycle", 4);
    gen1("cycle", 7);
    gen1("cycle", 9);
    gen1("cycle", 12);
    gen2("grid", 3, 3);
    gen2("grid", 3, 4);
    gen2("hexpatch", 3, 4);
    gen2("hexpatch", 4, 4);
    gen2("hexpatch", 3, 6);
    gen1("wheel", 5);
    gen1("wheel", 6);
    gen1("prism", 3);
    gen1("prism", 5);
    gen1("prism", 6);
    genv("platonic", "tetrahedron");
    genv("platonic", "cube");
    genv("platonic", "octahedron");
    genv("platonic", "dodecahedron");
    genv("platonic", "icosahedron");
    out.push_back(generate_fixture("h-gadget"));
    genv("badface-gadget", "a");
    genv("badface-gadget", "b");
    for (const char* name : {"path_2", "star_6", "star_7", "spider", "caterpillar",
                             "k4_subdiv", "theta_3_5_7", "double_triangle",
                             "triangle_pendant_4", "pentagon_ring", "quad_3366"})
        out.push_back(curated_fixture(name));
    return out;
}

inline json fixture_to_json(const Fixture& f) {
    json j;
    j["name"] = f.name;
    j["provenance"] = f.provenance;
    j["expected"] = f.expected;
    j["graph"] = graph_to_json(f.graph);
    return j;
}

inline Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.provenance = j.at("provenance").get<std::string>();
    f.expected = j.at("expected");
    f.graph = build_plane_graph(rotation_from_json(j.at("graph")));
    return f;
}

// ---------------------------------------------------------------------------
// Random class members for extension trials: trees and single-cycle graphs
// with pendant trees, degree-capped. Any rotation of a graph with at most one
// cycle embeds in the plane, so insertion order serves as the rotation.
// ---------------------------------------------------------------------------

inline PlaneGraph random_member_graph(unsigned seed, int n_lo = 8, int n_hi = 13,
                                      int degree_cap = 6) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> n_pick(n_lo, n_hi);
    const int n = n_pick(rng);
    gen::Rotation rot(n);
    int start = 0;
    if (rng() % 2 == 0) {
        std::uniform_int_distribution<int> c_pick(4, std::min(8, n));
        int c = c_pick(rng);
        for (int i = 0; i < c; ++i) {
            rot[i].push_back((i + 1) % c);
            rot[i].push_back((i + c - 1) % c);
        }
        start = c;
    } else {
        start = 1;
    }
    for (int v = start; v < n; ++v) {
        std::uniform_int_distribution<int> host_pick(0, v - 1);
        int host = host_pick(rng);
        int guard = 0;
        while (static_cast<int>(rot[host].size()) >= degree_cap && guard++ < 200)
            host = host_pick(rng);
        rot[v].push_back(host);
        rot[host].push_back(v);
    }
    return build_plane_graph(rot);
}

} // namespace planecol
