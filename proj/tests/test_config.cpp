#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "oracles.hpp"
#include "planecol/configuration.hpp"
#include "planecol/fixtures.hpp"

using namespace planecol;
namespace fs = std::filesystem;

namespace {

const std::string kConfigDir = std::string(PLANECOL_DATA_DIR) + "/configs";

Configuration h_config() { return load_configuration_file(kConfigDir + "/H.json"); }

} // namespace

TEST_CASE("the H pattern parses with its anchored quad") {
    Configuration cfg = h_config();
    CHECK(cfg.complete);
    CHECK(cfg.vertices.size() == 6);
    CHECK(cfg.edges.size() == 7);
    REQUIRE(cfg.faces.size() == 2);
    CHECK(cfg.faces[0].cycle.size() == 3);
    CHECK(cfg.faces[1].cycle.size() == 4);
    CHECK(cfg.faces[1].anchored.size() == 2);
    CHECK(cfg.distinct_groups.size() == 1);
    for (const auto& pv : cfg.vertices) {
        CHECK(pv.kind == PatternKind::Hollow);
        CHECK(pv.deg_lo == 4);
        CHECK(pv.deg_hi == 4);
    }
}

TEST_CASE("placeholder entries parse incomplete and are skipped by catalogs") {
    Configuration stub = load_configuration_file(kConfigDir + "/H_01.json");
    CHECK_FALSE(stub.complete);
    PlaneGraph g = build_plane_graph(gen::h_gadget());
    CHECK_THROWS_AS(find_configuration_matches(g, stub), Error);

    std::vector<std::string> paths;
    for (const auto& e : fs::directory_iterator(kConfigDir))
        if (e.path().extension() == ".json") paths.push_back(e.path().string());
    auto catalog = load_configuration_catalog(paths);
    REQUIRE(catalog.size() == 1);
    CHECK(catalog[0].name == "H");
}

TEST_CASE("an empty pattern object is malformed") {
    CHECK_THROWS_AS(parse_configuration(json::object()), Error);
}

TEST_CASE("the gadget hosts the H pattern in exactly two mirrored ways") {
    PlaneGraph g = build_plane_graph(gen::h_gadget());
    Configuration cfg = h_config();
    auto matches = find_configuration_matches(g, cfg);
    REQUIRE(matches.size() == 2);
    for (const auto& m : matches) {
        std::vector<Vertex> sorted = m;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    }
    CHECK(matches[0] != matches[1]);
}

TEST_CASE("a solid center with exact-degree leaves pins the host") {
    // x solid of degree 2 with two degree-1 ends: the whole 3-path, exactly
    json j;
    j["name"] = "mid";
    j["vertices"] = json::array({json{{"id", "x"}, {"kind", "solid"}, {"degree", 2}},
                                 json{{"id", "a"}, {"kind", "hollow"}, {"degree", 1}},
                                 json{{"id", "b"}, {"kind", "hollow"}, {"degree", 1}}});
    j["edges"] = json::array({json::array({"x", "a"}), json::array({"x", "b"})});
    Configuration cfg = parse_configuration(j);
    PlaneGraph p3 = build_plane_graph(gen::path(3));
    auto m3 = find_configuration_matches(p3, cfg);
    REQUIRE(m3.size() == 2);  // a/b swap
    // no match on a 4-path: every vertex adjacent to a path end also has a
    // degree-2 neighbor, so a and b (exact degree 1) can never both land
    PlaneGraph p4 = build_plane_graph(gen::path(4));
    auto m4 = find_configuration_matches(p4, cfg);
    CHECK(m4.empty());
}

TEST_CASE("explicit degrees are exact, omitted degrees bound from below") {
    json j;
    j["name"] = "deep";
    j["vertices"] = json::array({json{{"id", "x"}, {"kind", "hollow"}, {"degree", 6}},
                                 json{{"id", "y"}, {"kind", "hollow"}}});
    j["edges"] = json::array({json::array({"x", "y"})});
    Configuration cfg = parse_configuration(j);
    // an integer degree is an exact requirement, even on a hollow vertex
    CHECK(cfg.vertices[0].deg_lo == 6);
    CHECK(cfg.vertices[0].deg_hi == 6);
    // y shows one edge and declares nothing: window [1, unbounded)
    CHECK(cfg.vertices[1].deg_lo == 1);
    CHECK(cfg.vertices[1].deg_hi == (1 << 30));

    PlaneGraph star = build_plane_graph(curated::star(6));
    auto m = find_configuration_matches(star, cfg);
    CHECK(m.size() == 6);  // x pinned to the degree-6 hub, y any leaf

    // lowering x to an exact 5 admits nothing: no vertex of the star has
    // degree exactly 5
    j["vertices"][0]["degree"] = 5;
    CHECK(find_configuration_matches(star, parse_configuration(j)).empty());

    // an interval degree is inclusive on both ends
    j["vertices"][0]["degree"] = json::array({2, 6});
    Configuration ranged = parse_configuration(j);
    CHECK(ranged.vertices[0].deg_lo == 2);
    CHECK(ranged.vertices[0].deg_hi == 6);
    CHECK(find_configuration_matches(star, ranged).size() == 6);
}

TEST_CASE("matcher equals brute force on every small fixture") {
    Configuration cfg = h_config();
    for (const Fixture& f : build_corpus()) {
        if (f.graph.n() > 14) continue;
        INFO(f.name);
        auto lib = find_configuration_matches(f.graph, cfg);
        auto ref = oracles::brute_config_matches(f.graph, cfg);
        CHECK(lib == ref);
    }
}

TEST_CASE("squares without the anchored neighbors are rejected") {
    // cube: plenty of quads and triangles are absent, so H never matches;
    // octahedron: triangles but no quad faces
    for (const char* solid : {"cube", "octahedron"}) {
        PlaneGraph g = build_plane_graph(gen::platonic(solid));
        CHECK(find_configuration_matches(g, h_config()).empty());
    }
}

TEST_CASE("distinct groups forbid coincidence even when edges allow it") {
    json j;
    j["name"] = "pair";
    j["vertices"] = json::array({json{{"id", "u"}, {"kind", "hollow"}, {"degree", 1}},
                                 json{{"id", "v"}, {"kind", "hollow"}, {"degree", 1}}});
    j["edges"] = json::array();
    Configuration free_cfg = parse_configuration(j);
    PlaneGraph p2 = build_plane_graph(curated::path_2());
    CHECK(find_configuration_matches(p2, free_cfg).size() == 4);  // coincidence allowed
    j["distinct"] = json::array({json::array({"u", "v"})});
    Configuration pinned = parse_configuration(j);
    CHECK(find_configuration_matches(p2, pinned).size() == 2);
}

TEST_CASE("pattern adjacency and shared neighbors forbid coincidence") {
    json j;
    j["name"] = "tri";
    j["vertices"] = json::array({json{{"id", "a"}, {"kind", "hollow"}, {"degree", 1}},
                                 json{{"id", "b"}, {"kind", "hollow"}, {"degree", 1}},
                                 json{{"id", "c"}, {"kind", "hollow"}, {"degree", 2}}});
    j["edges"] = json::array({json::array({"a", "c"}), json::array({"b", "c"})});
    Configuration cfg = parse_configuration(j);
    // a and b share the neighbor c, so they may not coincide: on a star with
    // two leaves the only matches use both leaves
    gen::Rotation rot = {{1, 2}, {0}, {0}};
    PlaneGraph g = build_plane_graph(rot);
    auto m = find_configuration_matches(g, cfg);
    REQUIRE(m.size() == 2);
    for (const auto& row : m) CHECK(row[0] != row[1]);
}
