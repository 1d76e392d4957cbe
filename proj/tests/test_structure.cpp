#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "planecol/fixtures.hpp"
#include "planecol/structure.hpp"

using namespace planecol;

TEST_CASE("double triangle has exactly one chordal 4-cycle") {
    PlaneGraph g = build_plane_graph(curated::double_triangle());
    auto w4 = find_chordal_cycles(g, 4);
    REQUIRE(w4.size() == 1);
    CHECK(w4[0].chord == std::pair<Vertex, Vertex>{0, 1});
    CHECK_FALSE(class_membership(g).is_member);
}

TEST_CASE("grid has chordal 6-cycles but no chordal 4-cycles") {
    GenParams p;
    p.p1 = 3;
    p.p2 = 3;
    Fixture f = generate_fixture("grid", p);
    CHECK(find_chordal_cycles(f.graph, 4).empty());
    CHECK_FALSE(find_chordal_cycles(f.graph, 6).empty());
    CHECK_FALSE(class_membership(f.graph).is_member);
}

TEST_CASE("chordal cycle search agrees with brute force on the corpus") {
    for (const Fixture& f : build_corpus()) {
        if (f.graph.n() > 12) continue;
        INFO(f.name);
        for (int len : {4, 6}) {
            auto lib = find_chordal_cycles(f.graph, len);
            auto ref = oracles::brute_chordal(f.graph, len);
            CHECK(lib.size() == ref.size());
            for (const auto& w : lib) {
                // every library witness is a real cycle with a real chord
                REQUIRE(static_cast<int>(w.cycle.size()) == len);
                for (int i = 0; i < len; ++i)
                    CHECK(f.graph.has_edge(w.cycle[i], w.cycle[(i + 1) % len]));
                CHECK(f.graph.has_edge(w.chord.first, w.chord.second));
            }
        }
    }
}

TEST_CASE("only lengths 4 and 6 are supported") {
    PlaneGraph g = build_plane_graph(gen::cycle(5));
    CHECK_THROWS_AS(find_chordal_cycles(g, 5), Error);
}

TEST_CASE("membership verdicts for known graphs") {
    auto member = [](const gen::Rotation& rot) {
        return class_membership(build_plane_graph(rot)).is_member;
    };
    CHECK(member(gen::path(6)));
    CHECK(member(gen::cycle(4)));
    CHECK(member(gen::cycle(6)));
    CHECK(member(gen::hexpatch(3, 4)));
    CHECK(member(curated::theta_3_5_7()));
    CHECK(member(curated::quad_3366()));
    CHECK(member(gen::h_gadget()));
    CHECK(member(gen::platonic("dodecahedron")));
    CHECK_FALSE(member(gen::platonic("cube")));        // two squares share an edge
    CHECK_FALSE(member(gen::platonic("tetrahedron"))); // chordal 4-cycle
    CHECK_FALSE(member(gen::platonic("octahedron")));
    CHECK_FALSE(member(gen::wheel(5)));
    CHECK_FALSE(member(gen::prism(5)));
    CHECK_FALSE(member(gen::grid(3, 4)));
    CHECK_FALSE(member(curated::pentagon_ring()));     // triangle + pentagon = chorded 6-cycle
}

TEST_CASE("short cycle adjacency audit is clean exactly on compatible graphs") {
    CHECK(audit_short_cycle_adjacency(build_plane_graph(gen::hexpatch(3, 4))).clean());
    CHECK(audit_short_cycle_adjacency(build_plane_graph(gen::h_gadget())).clean());
    auto rep = audit_short_cycle_adjacency(build_plane_graph(curated::double_triangle()));
    REQUIRE_FALSE(rep.clean());
    CHECK(rep.violations[0].kind == "adjacent-3-cycles");
    // cube: min degree 3 turns on the adjacent-4-cycle rule
    auto cube = audit_short_cycle_adjacency(build_plane_graph(gen::platonic("cube")));
    CHECK(cube.min_degree_three);
    CHECK_FALSE(cube.clean());
}

TEST_CASE("wheel rim faces are special (3,3,5+) triangles") {
    PlaneGraph g = build_plane_graph(gen::wheel(5));
    StructureProfile prof = classify_faces_and_vertices(g);
    int special = 0;
    for (const auto& fp : prof.faces)
        if (fp.is_special) {
            ++special;
            CHECK(fp.special_kind == "(3,3,5+)");
        }
    CHECK(special == 5);
}

TEST_CASE("badface gadget a: one bad face, two weakly incident vertices") {
    PlaneGraph g = build_plane_graph(gen::badface_gadget("a"));
    StructureProfile prof = classify_faces_and_vertices(g);
    std::vector<int> bad_faces;
    for (const auto& fp : prof.faces)
        if (fp.is_bad) bad_faces.push_back(fp.id);
    REQUIRE(bad_faces.size() == 1);
    std::vector<Vertex> weak;
    for (const auto& vp : prof.vertices)
        if (!vp.weakly_incident_faces.empty()) weak.push_back(vp.id);
    CHECK(weak == std::vector<Vertex>{4, 5});  // the pendants of the two 3-vertices
    CHECK(prof.vertices[0].bad3);
    CHECK(prof.vertices[2].bad3);
    CHECK_FALSE(prof.vertices[1].bad3);
}

TEST_CASE("badface gadget b is a (3,4,4,5) bad face") {
    PlaneGraph g = build_plane_graph(gen::badface_gadget("b"));
    StructureProfile prof = classify_faces_and_vertices(g);
    int bad = 0;
    for (const auto& fp : prof.faces)
        if (fp.is_bad) {
            ++bad;
            std::vector<int> degs = fp.walk_degrees;
            std::sort(degs.begin(), degs.end());
            CHECK(degs == std::vector<int>{3, 4, 4, 5});
        }
    CHECK(bad == 1);
}

TEST_CASE("vertex kinds: 2-vertices split on having a mid-degree neighbor") {
    // path 0-1-2-3 plus pendants on 1: vertex 2 has a 3-degree neighbor
    gen::Rotation rot = {{1}, {0, 4, 2}, {1, 3}, {2}, {1}};
    PlaneGraph g = build_plane_graph(rot);
    StructureProfile prof = classify_faces_and_vertices(g);
    CHECK(prof.vertices[2].kind == VertexKind::Special2);
    PlaneGraph cyc = build_plane_graph(gen::cycle(6));
    StructureProfile cprof = classify_faces_and_vertices(cyc);
    for (const auto& vp : cprof.vertices) CHECK(vp.kind == VertexKind::Simple2);
}

TEST_CASE("3-vertices on special faces are special") {
    PlaneGraph g = build_plane_graph(gen::wheel(5));
    StructureProfile prof = classify_faces_and_vertices(g);
    for (Vertex v = 1; v <= 5; ++v) CHECK(prof.vertices[v].kind == VertexKind::Special3);
    PlaneGraph t = build_plane_graph(curated::k4_subdiv());
    StructureProfile tp = classify_faces_and_vertices(t);
    for (Vertex v = 0; v < 4; ++v) CHECK(tp.vertices[v].kind == VertexKind::Simple3);
}

TEST_CASE("degree multiset matcher handles ranges and duplicates") {
    CHECK(match_degree_multiset({3, 3, 7}, {{3, 3}, {3, 3}, {5, 1 << 30}}));
    CHECK_FALSE(match_degree_multiset({3, 4, 4}, {{3, 3}, {3, 3}, {5, 1 << 30}}));
    CHECK(match_degree_multiset({4, 5, 3, 5}, {{3, 3}, {4, 4}, {2, 5}, {2, 6}}));
    CHECK_FALSE(match_degree_multiset({3, 3}, {{3, 3}, {3, 3}, {3, 3}}));
}

TEST_CASE("face adjacency counts one entry per shared edge") {
    PlaneGraph g = build_plane_graph(gen::platonic("cube"));
    StructureProfile prof = classify_faces_and_vertices(g);
    for (const auto& fp : prof.faces) CHECK(fp.adjacent_faces.size() == 4);
    // a bridge borders the same face twice and produces no adjacency
    PlaneGraph p = build_plane_graph(gen::path(3));
    StructureProfile pp = classify_faces_and_vertices(p);
    CHECK(pp.faces[0].adjacent_faces.empty());
}
