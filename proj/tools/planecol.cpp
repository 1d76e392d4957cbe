// planecol: command-line front end for the plane-graph analysis library.
//
// Exit codes: 0 = all checks passed, 1 = an assertion failed (e.g. charge
// conservation broke, a coloring was invalid, no reducible set was found),
// 2 = input or usage error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "planecol/coloring.hpp"
#include "planecol/configuration.hpp"
#include "planecol/degeneracy.hpp"
#include "planecol/discharging.hpp"
#include "planecol/error.hpp"
#include "planecol/fixtures.hpp"
#include "planecol/graph_json.hpp"
#include "planecol/plane_graph.hpp"
#include "planecol/reducible.hpp"
#include "planecol/structure.hpp"

namespace fs = std::filesystem;
using namespace planecol;

namespace {

std::string data_dir() { return PLANECOL_DATA_DIR; }

// Accepts either a bare rotation object {"vertices":n,"rotation":{...}} or a
// fixture file with that object under "graph".
PlaneGraph load_graph(const std::string& path, bool allow_nonplanar) {
    json j = load_json_file(path);
    if (j.contains("graph")) j = j.at("graph");
    BuildOptions opts;
    opts.allow_nonplanar = allow_nonplanar;
    return build_plane_graph(rotation_from_json(j), opts);
}

void emit(const json& j, const std::string& out) {
    std::string text = canonical_dump(j);
    if (out.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_text_file(out, text);
}

std::string resolve_rules(const std::string& name) {
    if (name == "D") return data_dir() + "/rules/D.json";
    if (name == "R1") return data_dir() + "/rules/R-case1.json";
    if (name == "R3") return data_dir() + "/rules/R-case3.json";
    if (name == "R2v") return data_dir() + "/rules/R-case2-variant.json";
    if (name == "R4v") return data_dir() + "/rules/R-case4-variant.json";
    return name;  // treat as a path
}

std::vector<std::string> all_rule_names() { return {"D", "R1", "R3", "R2v", "R4v"}; }

std::vector<Configuration> default_catalog() {
    std::vector<std::string> paths;
    fs::path dir = fs::path(data_dir()) / "configs";
    if (fs::exists(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    return load_configuration_catalog(paths);
}

json analysis_json(const PlaneGraph& g) {
    ClassReport cr = class_membership(g);
    DegeneracyCertificate dc = degeneracy_ordering(g);
    json j;
    j["n"] = g.n();
    j["m"] = g.m();
    j["components"] = g.components();
    j["euler_ok"] = g.euler_ok();
    j["min_degree"] = g.min_degree();
    j["max_degree"] = g.max_degree();
    json faces = json::array();
    for (const auto& f : g.faces()) {
        json fj;
        fj["degree"] = f.degree();
        json walk = json::array();
        for (Vertex v : f.walk) walk.push_back(v);
        fj["walk"] = std::move(walk);
        faces.push_back(std::move(fj));
    }
    j["faces"] = std::move(faces);
    auto witnesses = [](const std::vector<CycleWitness>& ws) {
        json arr = json::array();
        for (const auto& w : ws) {
            json e;
            json cyc = json::array();
            for (Vertex v : w.cycle) cyc.push_back(v);
            e["cycle"] = std::move(cyc);
            e["chord"] = json::array({w.chord.first, w.chord.second});
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["chordal_4_cycles"] = witnesses(cr.chordal4);
    j["chordal_6_cycles"] = witnesses(cr.chordal6);
    j["is_member"] = cr.is_member;
    j["degeneracy"] = dc.degeneracy;
    return j;
}

int run_pipeline_task(const PlaneGraph& g, const std::string& task) {
    auto fail = [&](const std::string& why) {
        std::cout << "FAIL " << task << ": " << why << "\n";
        return 1;
    };
    auto pass = [&]() {
        std::cout << "PASS " << task << "\n";
        return 0;
    };
    if (task == "analyze") {
        analysis_json(g);
        return pass();
    }
    if (task == "member" || task == "nonmember") {
        bool mem = class_membership(g).is_member;
        if (mem == (task == "member")) return pass();
        return fail(mem ? "graph is a member" : "graph is not a member");
    }
    if (task.rfind("degeneracy<=", 0) == 0) {
        int bound = std::stoi(task.substr(12));
        int d = degeneracy_ordering(g).degeneracy;
        return d <= bound ? pass() : fail("degeneracy " + std::to_string(d));
    }
    if (task.rfind("discharge:", 0) == 0) {
        RuleSet rs = load_ruleset_file(resolve_rules(task.substr(10)));
        ChargeLedger led = apply_ruleset(g, rs);
        return led.conservation_ok ? pass() : fail("conservation violated");
    }
    if (task.rfind("color:", 0) == 0) {
        int k = std::stoi(task.substr(6));
        std::vector<int> assignment;
        if (g.n() <= 16) {
            auto col = exact_equitable(g, k);
            if (!col) return fail("no equitable coloring exists");
            assignment = col->assignment;
        } else {
            ConstructiveOptions opts;
            opts.override_preconditions = true;
            assignment = color_constructive(g, k, default_catalog(), opts).coloring.assignment;
        }
        auto val = validate_coloring(g, k, assignment);
        return val.ok ? pass() : fail(val.violation);
    }
    if (task.rfind("chie=", 0) == 0) {
        int want = std::stoi(task.substr(5));
        int got = chi_e(g);
        return got == want ? pass() : fail("chi_e = " + std::to_string(got));
    }
    if (task.rfind("chiestar=", 0) == 0) {
        int want = std::stoi(task.substr(9));
        int got = chi_star_e(g);
        return got == want ? pass() : fail("chi*_e = " + std::to_string(got));
    }
    throw Error(ErrorCode::BadParams, "unknown pipeline task: " + task);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph structure, discharging and equitable coloring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, out_path, rules = "R1", config_path, lists_path, coloring_path;
    std::string kind, variant, mode = "constructive", dir, solid, format = "json";
    bool allow_nonplanar = false, audit = false, do_override = false, force = false;
    int k = 7, p1 = -1, p2 = -1;
    unsigned seed = 1;

    auto add_graph = [&](CLI::App* sc) {
        sc->add_option("--graph", graph_path, "graph or fixture JSON file")->required();
        sc->add_flag("--allow-nonplanar", allow_nonplanar,
                     "accept rotations whose faces break the Euler identity");
    };
    auto add_out = [&](CLI::App* sc) {
        sc->add_option("--out", out_path, "write JSON here instead of stdout");
    };

    auto* sc_analyze = app.add_subcommand("analyze", "counts, faces, membership, degeneracy");
    add_graph(sc_analyze);
    add_out(sc_analyze);
    sc_analyze->add_option("--format", format, "json|dot");

    auto* sc_degen = app.add_subcommand("degeneracy", "greedy removal ordering certificate");
    add_graph(sc_degen);
    add_out(sc_degen);

    auto* sc_dis = app.add_subcommand("discharge", "run a discharging ruleset");
    add_graph(sc_dis);
    add_out(sc_dis);
    sc_dis->add_option("--rules", rules, "D|R1|R3|R2v|R4v or a ruleset file path");
    sc_dis->add_flag("--audit", audit, "append the negative-charge audit");

    auto* sc_match = app.add_subcommand("match", "find configuration pattern matches");
    add_graph(sc_match);
    add_out(sc_match);
    sc_match->add_option("--config", config_path, "configuration JSON file")->required();

    auto* sc_reduce = app.add_subcommand("reduce", "search for a reducible vertex set");
    add_graph(sc_reduce);
    add_out(sc_reduce);
    sc_reduce->add_option("--k", k, "set size (number of colors)");

    auto* sc_color = app.add_subcommand("color", "equitable k-coloring");
    add_graph(sc_color);
    add_out(sc_color);
    sc_color->add_option("--k", k, "number of colors")->required();
    sc_color->add_option("--mode", mode, "exact|constructive");
    sc_color->add_flag("--override", do_override, "skip the member / k >= max{7,Delta} checks");

    auto* sc_chie = app.add_subcommand("chie", "least k admitting an equitable k-coloring");
    add_graph(sc_chie);
    add_out(sc_chie);

    auto* sc_chies = app.add_subcommand("chiestar", "equitable coloring threshold");
    add_graph(sc_chies);
    add_out(sc_chies);

    auto* sc_lcol = app.add_subcommand("list-color", "equitable coloring from vertex lists");
    add_graph(sc_lcol);
    add_out(sc_lcol);
    sc_lcol->add_option("--lists", lists_path, "JSON object vertex -> list")->required();
    sc_lcol->add_option("--mode", mode, "exact|constructive");
    sc_lcol->add_flag("--override", do_override, "skip the member / k >= max{7,Delta} checks");

    auto* sc_val = app.add_subcommand("validate", "check a stored coloring");
    add_graph(sc_val);
    sc_val->add_option("--coloring", coloring_path, "JSON with k and assignment")->required();
    sc_val->add_option("--lists", lists_path, "optional lists the coloring must respect");

    auto* sc_gen = app.add_subcommand("generate", "emit a fixture");
    add_out(sc_gen);
    sc_gen->add_option("--kind", kind,
                       "path|cycle|grid|hexpatch|wheel|prism|platonic|h-gadget|badface-gadget"
                       "|curated")
        ->required();
    sc_gen->add_option("--p1", p1, "first size parameter");
    sc_gen->add_option("--p2", p2, "second size parameter");
    sc_gen->add_option("--variant", variant, "platonic solid, gadget variant or curated name");

    auto* sc_cw = app.add_subcommand("corpus-write", "write the full fixture corpus");
    sc_cw->add_option("--dir", dir, "target directory (default: data/fixtures)");
    sc_cw->add_flag("--force", force, "overwrite existing files");

    auto* sc_cr = app.add_subcommand("corpus-run", "re-verify every fixture in a directory");
    sc_cr->add_option("--dir", dir, "fixture directory (default: data/fixtures)");

    auto* sc_pipe = app.add_subcommand("pipeline", "run assertion tasks against one graph");
    add_graph(sc_pipe);
    std::vector<std::string> tasks;
    sc_pipe->add_option("--task", tasks,
                        "analyze | member | nonmember | degeneracy<=N | discharge:<rules> | "
                        "color:<k> | chie=<v> | chiestar=<v> (repeatable)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_analyze->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            if (format == "dot") {
                std::string text = graph_to_dot(g);
                if (out_path.empty())
                    std::fputs(text.c_str(), stdout);
                else
                    write_text_file(out_path, text);
            } else {
                emit(analysis_json(g), out_path);
            }
            return 0;
        }
        if (sc_degen->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            DegeneracyCertificate dc = degeneracy_ordering(g);
            json j;
            json order = json::array();
            for (Vertex v : dc.order) order.push_back(v);
            j["order"] = std::move(order);
            json back = json::array();
            for (int b : dc.back_degree) back.push_back(b);
            j["back_degrees"] = std::move(back);
            j["degeneracy"] = dc.degeneracy;
            emit(j, out_path);
            return 0;
        }
        if (sc_dis->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            RuleSet rs = load_ruleset_file(resolve_rules(rules));
            StructureProfile prof = classify_faces_and_vertices(g);
            ChargeLedger led = apply_ruleset(g, rs, &prof);
            json j = ledger_to_json(led);
            if (audit) j["audit"] = audit_to_json(audit_charges(g, prof, led));
            emit(j, out_path);
            return led.conservation_ok ? 0 : 1;
        }
        if (sc_match->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            Configuration cfg = load_configuration_file(config_path);
            auto matches = find_configuration_matches(g, cfg);
            json j;
            j["config"] = cfg.name;
            j["count"] = static_cast<int>(matches.size());
            json arr = json::array();
            for (const auto& m : matches) {
                json row = json::array();
                for (Vertex v : m) row.push_back(v);
                arr.push_back(std::move(row));
            }
            j["matches"] = std::move(arr);
            emit(j, out_path);
            return 0;
        }
        if (sc_reduce->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            FindReducibleResult fr = find_reducible_set(g, k, default_catalog());
            json j;
            j["found"] = fr.found;
            j["method"] = fr.method;
            j["attempts"] = fr.attempts;
            json an = json::array();
            for (const auto& a : fr.anomalies) an.push_back(a);
            j["anomalies"] = std::move(an);
            if (fr.found) {
                json order = json::array();
                for (Vertex v : fr.set.order) order.push_back(v);
                j["order"] = std::move(order);
                json oc = json::array();
                for (int c : fr.set.outside_counts) oc.push_back(c);
                j["outside_counts"] = std::move(oc);
                j["verified"] = verify_reducible(g, fr.set.order, k).ok;
            }
            emit(j, out_path);
            return fr.found ? 0 : 1;
        }
        if (sc_color->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            json j;
            std::vector<int> assignment;
            if (mode == "exact") {
                auto col = exact_equitable(g, k, std::max(g.n(), 16));
                j["feasible"] = col.has_value();
                if (!col) {
                    emit(j, out_path);
                    return 1;
                }
                j.update(coloring_to_json(*col));
                assignment = col->assignment;
            } else if (mode == "constructive") {
                ConstructiveOptions opts;
                opts.override_preconditions = do_override;
                ConstructiveColoring cc = color_constructive(g, k, default_catalog(), opts);
                j = coloring_to_json(cc.coloring);
                j["levels"] = cc.levels;
                json an = json::array();
                for (const auto& a : cc.anomalies) an.push_back(a);
                j["anomalies"] = std::move(an);
                assignment = cc.coloring.assignment;
            } else {
                throw Error(ErrorCode::BadParams, "mode must be exact or constructive");
            }
            auto val = validate_coloring(g, k, assignment);
            j["valid"] = val.ok;
            if (!val.ok) j["violation"] = val.violation;
            emit(j, out_path);
            return val.ok ? 0 : 1;
        }
        if (sc_chie->parsed() || sc_chies->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            json j;
            if (sc_chie->parsed())
                j["chi_e"] = chi_e(g, std::max(g.n(), 16));
            else
                j["chi_star_e"] = chi_star_e(g, std::max(g.n(), 16));
            emit(j, out_path);
            return 0;
        }
        if (sc_lcol->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            ListAssignment L = lists_from_json(load_json_file(lists_path), g.n());
            json j;
            std::vector<int> assignment;
            if (mode == "exact") {
                auto col = exact_equitable_list(g, L, 0, std::max(g.n(), 16));
                j["feasible"] = col.has_value();
                if (!col) {
                    emit(j, out_path);
                    return 1;
                }
                assignment = *col;
            } else if (mode == "constructive") {
                ConstructiveOptions opts;
                opts.override_preconditions = do_override;
                ConstructiveListColoring cc =
                    list_color_constructive(g, L, default_catalog(), opts);
                j["levels"] = cc.levels;
                assignment = cc.coloring.assignment;
            } else {
                throw Error(ErrorCode::BadParams, "mode must be exact or constructive");
            }
            json arr = json::array();
            for (int c : assignment) arr.push_back(c);
            j["assignment"] = std::move(arr);
            auto val = validate_list_coloring(g, L, assignment);
            j["valid"] = val.ok;
            if (!val.ok) j["violation"] = val.violation;
            emit(j, out_path);
            return val.ok ? 0 : 1;
        }
        if (sc_val->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            json cj = load_json_file(coloring_path);
            std::vector<int> assignment;
            for (const auto& c : cj.at("assignment")) assignment.push_back(c.get<int>());
            ColoringValidation val;
            if (!lists_path.empty()) {
                ListAssignment L = lists_from_json(load_json_file(lists_path), g.n());
                val = validate_list_coloring(g, L, assignment);
            } else {
                val = validate_coloring(g, cj.at("k").get<int>(), assignment);
            }
            json j;
            j["valid"] = val.ok;
            if (!val.ok) j["violation"] = val.violation;
            emit(j, out_path);
            return val.ok ? 0 : 1;
        }
        if (sc_gen->parsed()) {
            Fixture f;
            if (kind == "curated") {
                if (variant.empty())
                    throw Error(ErrorCode::BadParams, "curated needs --variant <name>");
                f = curated_fixture(variant);
            } else {
                GenParams p;
                p.p1 = p1;
                p.p2 = p2;
                p.variant = variant;
                f = generate_fixture(kind, p);
            }
            emit(fixture_to_json(f), out_path);
            return 0;
        }
        if (sc_cw->parsed()) {
            fs::path target = dir.empty() ? fs::path(data_dir()) / "fixtures" : fs::path(dir);
            fs::create_directories(target);
            int written = 0;
            for (const Fixture& f : build_corpus()) {
                fs::path file = target / (f.name + ".json");
                if (fs::exists(file) && !force)
                    throw Error(ErrorCode::MalformedInput,
                                file.string() + " exists (use --force)");
                write_text_file(file.string(), canonical_dump(fixture_to_json(f)));
                ++written;
            }
            std::cout << "wrote " << written << " fixtures to " << target.string() << "\n";
            return 0;
        }
        if (sc_cr->parsed()) {
            fs::path source = dir.empty() ? fs::path(data_dir()) / "fixtures" : fs::path(dir);
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(source))
                if (e.path().extension() == ".json") files.push_back(e.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) throw Error(ErrorCode::MalformedInput, "no fixtures found");
            int bad = 0;
            for (const auto& file : files) {
                json j = load_json_file(file.string());
                Fixture f = fixture_from_json(j);
                std::vector<std::string> problems;
                json expected_now = compute_expected(f.graph);
                if (expected_now != f.expected) problems.push_back("expected block drifted");
                if (!f.expected.at("chordal_4_cycles").get<int>() &&
                    degeneracy_ordering(f.graph).degeneracy > 4)
                    problems.push_back("degeneracy above 4 without a chordal 4-cycle");
                StructureProfile prof = classify_faces_and_vertices(f.graph);
                for (const auto& rn : all_rule_names()) {
                    ChargeLedger led =
                        apply_ruleset(f.graph, load_ruleset_file(resolve_rules(rn)), &prof);
                    if (!led.conservation_ok) problems.push_back(rn + ": conservation violated");
                }
                if (problems.empty()) {
                    std::cout << "OK   " << f.name << "\n";
                } else {
                    ++bad;
                    for (const auto& p : problems)
                        std::cout << "FAIL " << f.name << ": " << p << "\n";
                }
            }
            std::cout << files.size() << " fixtures, " << bad << " failing\n";
            return bad == 0 ? 0 : 1;
        }
        if (sc_pipe->parsed()) {
            PlaneGraph g = load_graph(graph_path, allow_nonplanar);
            int failures = 0;
            for (const auto& t : tasks) failures += run_pipeline_task(g, t);
            return failures == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
