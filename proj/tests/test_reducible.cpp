#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>

#include "oracles.hpp"
#include "planecol/fixtures.hpp"
#include "planecol/reducible.hpp"

using namespace planecol;

namespace {

Configuration h_config() {
    return load_configuration_file(std::string(PLANECOL_DATA_DIR) + "/configs/H.json");
}

std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

PlaneGraph complete_graph(int n) {
    gen::Rotation rot(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
            if (u != v) rot[v].push_back(u);
    return build_plane_graph(rot, {.allow_nonplanar = true});
}

} // namespace

TEST_CASE("a star is reducible when every vertex is inside") {
    PlaneGraph g = build_plane_graph(curated::star(6));
    auto res = verify_reducible(g, {0, 1, 2, 3, 4, 5, 6}, 7);
    CHECK(res.ok);
    CHECK(res.violation_index == -1);
    CHECK(res.set.outside_counts == std::vector<int>(7, 0));
}

TEST_CASE("violations report the first bad one-based position") {
    PlaneGraph g = build_plane_graph(gen::path(4));

    // x_2 = 2 keeps one neighbor (3) outside but has no slack left
    auto tail = verify_reducible(g, {1, 2}, 2);
    CHECK_FALSE(tail.ok);
    CHECK(tail.violation_index == 2);
    CHECK(tail.violation_count == 1);
    CHECK(tail.set.outside_counts == std::vector<int>{1, 1});

    // x_1 = 1 has both neighbors outside, exceeding its slack of k-1 = 1
    auto head = verify_reducible(g, {1, 3}, 2);
    CHECK_FALSE(head.ok);
    CHECK(head.violation_index == 1);
    CHECK(head.violation_count == 2);
    // counts keep accumulating past the first violation
    CHECK(head.set.outside_counts == std::vector<int>{2, 1});
}

TEST_CASE("verification rejects malformed orders") {
    PlaneGraph g = build_plane_graph(gen::path(4));
    auto code_of = [&](const std::vector<Vertex>& order, int k) -> std::optional<ErrorCode> {
        try {
            verify_reducible(g, order, k);
        } catch (const Error& e) {
            return e.code();
        }
        return std::nullopt;
    };
    CHECK(code_of({0, 1}, 3) == ErrorCode::WrongSize);
    CHECK(code_of({0, 0}, 2) == ErrorCode::DuplicateVertex);
    CHECK(code_of({0, 99}, 2) == ErrorCode::MalformedInput);
}

TEST_CASE("completion fills free slots top-down with minimum residual degree") {
    PlaneGraph g = build_plane_graph(gen::path(4));
    // top slot: path ends tie at degree 1, lowest id 0 wins; with 0 gone,
    // vertices 1 and 3 tie at residual degree 1, so 1 takes the bottom slot
    CHECK(complete_assignment(g, {-1, -1}) == std::vector<Vertex>{1, 0});
    // a pinned slot is left alone and shadows its vertex for the rest
    CHECK(complete_assignment(g, {-1, 2}) == std::vector<Vertex>{3, 2});
}

TEST_CASE("completion validates its partial assignment") {
    PlaneGraph g = build_plane_graph(gen::path(3));
    auto code_of = [&](std::vector<Vertex> partial) -> std::optional<ErrorCode> {
        try {
            complete_assignment(g, std::move(partial));
        } catch (const Error& e) {
            return e.code();
        }
        return std::nullopt;
    };
    CHECK(code_of({0, 0, -1}) == ErrorCode::DuplicateVertex);
    CHECK(code_of({-1, -1, -1, -1}) == ErrorCode::GraphTooSmall);
    CHECK(code_of({99, -1, -1}) == ErrorCode::MalformedInput);
}

TEST_CASE("seeds occupy the top positions in the order given") {
    PlaneGraph g = build_plane_graph(gen::path(7));
    auto order = complete_seed(g, {3}, 3);
    REQUIRE(order.size() == 3);
    CHECK(order[2] == 3);  // seed[0] is x_k
    // deleting 3 splits the path; ends tie at degree 1 and resolve by id
    CHECK(order[1] == 0);
    CHECK(order[0] == 1);
    CHECK_THROWS_AS(complete_seed(g, {0, 1, 2}, 2), Error);
}

TEST_CASE("a twelve-cycle needs one seeded vertex") {
    PlaneGraph g = build_plane_graph(gen::cycle(12));
    auto res = find_reducible_set(g, 7);
    REQUIRE(res.found);
    CHECK(res.method == "seed");
    // seed {0} reproduces the failing empty completion; seed {1} closes the
    // cycle neighborhood at the top and is the first to pass
    CHECK(res.set.order == std::vector<Vertex>{6, 5, 4, 3, 2, 0, 1});
    CHECK(verify_reducible(g, res.set.order, 7).ok);
}

TEST_CASE("a long tail makes the empty completion succeed") {
    Fixture f = curated_fixture("quad_3366");
    auto res = find_reducible_set(f.graph, 7);
    REQUIRE(res.found);
    CHECK(res.method == "empty-seed");
    CHECK(res.set.order == std::vector<Vertex>{6, 5, 4, 3, 2, 1, 0});
}

TEST_CASE("the pendant gadget resolves through the catalog") {
    PlaneGraph g = build_plane_graph(gen::h_gadget());
    auto res = find_reducible_set(g, 7, {h_config()});
    REQUIRE(res.found);
    CHECK(res.method == "catalog:H");
    // the six pattern labels pin positions 7,6,5,4,3,1; the free second slot
    // takes the first isolated pendant
    CHECK(res.set.order == std::vector<Vertex>{5, 6, 4, 3, 2, 1, 0});
    CHECK(verify_reducible(g, res.set.order, 7).ok);

    // without the catalog the finder still succeeds, just further down
    auto bare = find_reducible_set(g, 7);
    REQUIRE(bare.found);
    CHECK(bare.method != "catalog:H");
    CHECK(verify_reducible(g, bare.set.order, 7).ok);

    // at k = 4 the label x_k-4 would pin position 0, so catalog rows are
    // unusable and never claim the result
    auto small = find_reducible_set(g, 4, {h_config()});
    CHECK(small.method.rfind("catalog", 0) == std::string::npos);
}

TEST_CASE("the two-bad-vertex gadget falls to an ordered seed") {
    PlaneGraph g = build_plane_graph(gen::badface_gadget("a"));
    auto res = find_reducible_set(g, 7);
    REQUIRE(res.found);
    CHECK(res.method == "seed");
    CHECK(sorted_copy(res.set.order) == std::vector<Vertex>{0, 1, 4, 5, 6, 7, 8});
    CHECK(verify_reducible(g, res.set.order, 7).ok);
}

TEST_CASE("the exact stage covers graphs the heuristics miss") {
    PlaneGraph g = build_plane_graph(gen::cycle(12));
    FindOptions opts;
    opts.max_seed_size = 0;  // disable the seed stage
    auto res = find_reducible_set(g, 7, {}, opts);
    REQUIRE(res.found);
    CHECK(res.method == "exact-subset");
    // first feasible subset in id order is {0..6}; its order ranks the two
    // boundary vertices (one outside neighbor each) into the low positions
    CHECK(res.set.order == std::vector<Vertex>{6, 0, 5, 4, 3, 2, 1});
    CHECK(verify_reducible(g, res.set.order, 7).ok);

    // with the exact stage budgeted out as well, the search reports why
    opts.exact_budget = 1;
    auto skipped = find_reducible_set(g, 7, {}, opts);
    CHECK_FALSE(skipped.found);
    REQUIRE(skipped.anomalies.size() == 1);
    CHECK(skipped.anomalies[0].find("exact stage skipped") != std::string::npos);
}

TEST_CASE("a complete graph on eight vertices has no seven-set") {
    PlaneGraph k8 = complete_graph(8);
    auto res = find_reducible_set(k8, 7);
    CHECK_FALSE(res.found);
    CHECK(res.anomalies.empty());  // the exact stage ran and proved exhaustion

    // taking the whole graph is always reducible: nothing is outside
    auto all = find_reducible_set(k8, 8);
    REQUIRE(all.found);
    CHECK(all.method == "empty-seed");
    CHECK(sorted_copy(all.set.order) == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("out-of-range sizes report not found") {
    PlaneGraph g = build_plane_graph(gen::path(3));
    CHECK_FALSE(find_reducible_set(g, 0).found);
    CHECK_FALSE(find_reducible_set(g, 5).found);
}
