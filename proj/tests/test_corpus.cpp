#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "planecol/discharging.hpp"
#include "planecol/fixtures.hpp"

using namespace planecol;
namespace fs = std::filesystem;

namespace {

const std::string kFixtureDir = std::string(PLANECOL_DATA_DIR) + "/fixtures";
const std::string kRuleDir = std::string(PLANECOL_DATA_DIR) + "/rules";

std::vector<fs::path> fixture_files() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(kFixtureDir))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("the corpus ships at least thirty fixtures") {
    CHECK(fixture_files().size() >= 30);
}

TEST_CASE("shipped files agree with the in-memory corpus") {
    std::set<std::string> on_disk;
    for (const auto& p : fixture_files()) on_disk.insert(p.stem().string());
    std::set<std::string> in_memory;
    for (const Fixture& f : build_corpus()) in_memory.insert(f.name);
    CHECK(on_disk == in_memory);
}

TEST_CASE("every fixture file re-derives exactly and re-dumps byte-identically") {
    for (const auto& p : fixture_files()) {
        INFO(p.filename().string());
        json j = load_json_file(p.string());
        Fixture f = fixture_from_json(j);
        CHECK(f.name == p.stem().string());
        CHECK(compute_expected(f.graph) == f.expected);
        CHECK(canonical_dump(fixture_to_json(f)) == slurp(p));
    }
}

TEST_CASE("membership verdicts are frozen") {
    const std::map<std::string, bool> frozen = {
        {"path_2", true},        {"path_4", true},
        {"path_7", true},        {"path_10", true},
        {"cycle_4", true},       {"cycle_7", true},
        {"cycle_9", true},       {"cycle_12", true},
        {"grid_3x3", false},     {"grid_3x4", false},
        {"hexpatch_3x4", true},  {"hexpatch_4x4", true},
        {"hexpatch_3x6", true},  {"wheel_5", false},
        {"wheel_6", false},      {"prism_3", false},
        {"prism_5", false},      {"prism_6", false},
        {"tetrahedron", false},  {"cube", false},
        {"octahedron", false},   {"dodecahedron", true},
        {"icosahedron", false},  {"h_gadget", true},
        {"badface_a", true},     {"badface_b", true},
        {"star_6", true},        {"star_7", true},
        {"spider", true},        {"caterpillar", true},
        {"k4_subdiv", true},     {"theta_3_5_7", true},
        {"double_triangle", false},
        {"triangle_pendant_4", true},
        {"pentagon_ring", false},
        {"quad_3366", true},
    };
    std::map<std::string, bool> actual;
    for (const Fixture& f : build_corpus())
        actual[f.name] = f.expected.at("is_member").get<bool>();
    CHECK(actual == frozen);
}

TEST_CASE("charge conservation holds on the whole corpus") {
    std::vector<RuleSet> rulesets;
    for (const char* name :
         {"D.json", "R-case1.json", "R-case3.json", "R-case2-variant.json",
          "R-case4-variant.json"})
        rulesets.push_back(load_ruleset_file(kRuleDir + "/" + name));
    for (const Fixture& f : build_corpus()) {
        StructureProfile prof = classify_faces_and_vertices(f.graph);
        for (const RuleSet& rs : rulesets) {
            INFO(f.name + " under " + rs.name);
            ChargeLedger led = apply_ruleset(f.graph, rs, &prof);
            CHECK(led.conservation_ok);
            Charge required =
                scheme_by_name(led.scheme_name).component_total * f.graph.components();
            CHECK(led.total_initial == required);
            CHECK(led.total_final == required);
        }
    }
}
