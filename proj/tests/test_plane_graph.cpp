#include <catch2/catch_amalgamated.hpp>

#include "planecol/fixtures.hpp"
#include "planecol/graph_json.hpp"
#include "planecol/plane_graph.hpp"

using namespace planecol;

TEST_CASE("path faces and counts") {
    PlaneGraph g = build_plane_graph(gen::path(4));
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.components() == 1);
    REQUIRE(g.faces().size() == 1);
    CHECK(g.face(0).degree() == 6);  // every edge twice
    CHECK(g.euler_ok());
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("cycle has two faces of full degree") {
    PlaneGraph g = build_plane_graph(gen::cycle(5));
    REQUIRE(g.faces().size() == 2);
    CHECK(g.face(0).degree() == 5);
    CHECK(g.face(1).degree() == 5);
    CHECK(g.euler_ok());
}

TEST_CASE("wheel 3 is a planar K4 with four triangles") {
    PlaneGraph g = build_plane_graph(gen::wheel(3));
    CHECK(g.n() == 4);
    CHECK(g.m() == 6);
    REQUIRE(g.faces().size() == 4);
    for (const auto& f : g.faces()) CHECK(f.degree() == 3);
}

TEST_CASE("prism rotations trace two n-gons and n squares") {
    PlaneGraph g = build_plane_graph(gen::prism(5));
    CHECK(g.n() == 10);
    CHECK(g.m() == 15);
    REQUIRE(g.faces().size() == 7);
    int squares = 0, pentagons = 0;
    for (const auto& f : g.faces()) {
        if (f.degree() == 4) ++squares;
        if (f.degree() == 5) ++pentagons;
    }
    CHECK(squares == 5);
    CHECK(pentagons == 2);
}

TEST_CASE("platonic solids satisfy the Euler identity with the right faces") {
    struct Row {
        const char* name;
        int n, m, f, face_deg;
    };
    for (const Row& r : std::initializer_list<Row>{{"tetrahedron", 4, 6, 4, 3},
                                                   {"cube", 8, 12, 6, 4},
                                                   {"octahedron", 6, 12, 8, 3},
                                                   {"dodecahedron", 20, 30, 12, 5},
                                                   {"icosahedron", 12, 30, 20, 3}}) {
        PlaneGraph g = build_plane_graph(gen::platonic(r.name));
        INFO(r.name);
        CHECK(g.n() == r.n);
        CHECK(g.m() == r.m);
        CHECK(g.euler_ok());
        REQUIRE(static_cast<int>(g.faces().size()) == r.f);
        for (const auto& f : g.faces()) CHECK(f.degree() == r.face_deg);
    }
}

TEST_CASE("cut vertices appear twice on a boundary walk") {
    PlaneGraph g = build_plane_graph(curated::bowtie());
    REQUIRE(g.faces().size() == 3);
    std::vector<int> degs;
    for (const auto& f : g.faces()) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{3, 3, 6});  // outer walk passes vertex 2 twice
}

TEST_CASE("disconnected input gets per-component Euler checks") {
    // two disjoint triangles
    gen::Rotation rot = {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}};
    PlaneGraph g = build_plane_graph(rot);
    CHECK(g.components() == 2);
    CHECK(g.euler_ok());
    CHECK(g.faces().size() == 4);
}

TEST_CASE("asymmetric rotation is rejected") {
    gen::Rotation rot = {{1}, {}};
    CHECK_THROWS_AS(build_plane_graph(rot), Error);
}

TEST_CASE("isolated vertices need the explicit option") {
    gen::Rotation rot = {{1}, {0}, {}};
    CHECK_THROWS_AS(build_plane_graph(rot), Error);
    BuildOptions opts;
    opts.allow_isolated = true;
    PlaneGraph g = build_plane_graph(rot, opts);
    CHECK(g.n() == 3);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("nonplanar rotation flags euler_ok false when allowed") {
    // K5: every vertex adjacent to every other; no rotation makes this planar.
    gen::Rotation rot(5);
    for (Vertex v = 0; v < 5; ++v)
        for (Vertex u = 0; u < 5; ++u)
            if (u != v) rot[v].push_back(u);
    CHECK_THROWS_AS(build_plane_graph(rot), Error);
    BuildOptions opts;
    opts.allow_nonplanar = true;
    PlaneGraph g = build_plane_graph(rot, opts);
    CHECK_FALSE(g.euler_ok());
    CHECK(g.m() == 10);
}

TEST_CASE("induced subgraph keeps rotation order and reports old ids") {
    PlaneGraph g = build_plane_graph(gen::cycle(6));
    std::vector<Vertex> keep = {0, 1, 2, 3, 4};
    InducedSubgraph sub = induced_subgraph(g, keep);
    CHECK(sub.graph.n() == 5);
    CHECK(sub.graph.m() == 4);  // path
    CHECK(sub.old_ids == keep);
    CHECK(sub.graph.euler_ok());
}

TEST_CASE("rotation json round trip is byte identical") {
    PlaneGraph g = build_plane_graph(gen::hexpatch(3, 4));
    json j = graph_to_json(g);
    std::string once = canonical_dump(j);
    PlaneGraph h = build_plane_graph(rotation_from_json(j));
    std::string twice = canonical_dump(graph_to_json(h));
    CHECK(once == twice);
    CHECK(h.m() == g.m());
}

TEST_CASE("faces_of_edge returns the two sides") {
    PlaneGraph g = build_plane_graph(gen::prism(3));
    auto [fa, fb] = g.faces_of_edge(0, 1);
    CHECK(fa != fb);
    int da = g.face(fa).degree(), db = g.face(fb).degree();
    CHECK(std::min(da, db) == 3);
    CHECK(std::max(da, db) == 4);
}

TEST_CASE("dot export mentions every vertex") {
    PlaneGraph g = build_plane_graph(gen::path(3));
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
