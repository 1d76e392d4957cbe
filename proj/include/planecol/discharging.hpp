#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "planecol/charge.hpp"
#include "planecol/error.hpp"
#include "planecol/graph_json.hpp"
#include "planecol/plane_graph.hpp"
#include "planecol/structure.hpp"

namespace planecol {

// ---------------------------------------------------------------------------
// Charge schemes. Initial charge is linear in the element's degree; on a
// plane graph the per-component sum telescopes to a constant through the
// Euler identity.
// ---------------------------------------------------------------------------

struct ChargeScheme {
    std::string name;
    Charge vertex_coeff, vertex_off;  // w(v) = vertex_coeff * d(v) + vertex_off
    Charge face_coeff, face_off;      // w(f) = face_coeff * d(f) + face_off
    Charge component_total;
};

inline ChargeScheme scheme_A() { return {"A", 2, -6, 1, -6, -12}; }
inline ChargeScheme scheme_B() { return {"B", 3, -10, 2, -10, -20}; }

inline ChargeScheme scheme_by_name(const std::string& name) {
    if (name == "A") return scheme_A();
    if (name == "B") return scheme_B();
    throw Error(ErrorCode::MalformedInput, "unknown charge scheme: " + name);
}

// ---------------------------------------------------------------------------
// Ledger elements and transfers.
// ---------------------------------------------------------------------------

struct ElemId {
    bool is_face = false;
    int id = 0;

    bool operator<(const ElemId& o) const {
        if (is_face != o.is_face) return !is_face;  // vertices sort before faces
        return id < o.id;
    }
    bool operator==(const ElemId& o) const { return is_face == o.is_face && id == o.id; }
    std::string str() const { return (is_face ? "f" : "v") + std::to_string(id); }
};

struct Transfer {
    int rule_index = 0;       // declaration order within the ruleset
    std::string rule;
    ElemId from, to;
    Charge amount;            // total moved for this (rule, from, to) triple

    bool operator<(const Transfer& o) const {
        if (rule_index != o.rule_index) return rule_index < o.rule_index;
        if (!(from == o.from)) return from < o.from;
        return to < o.to;
    }
};

struct ChargeLedger {
    std::string scheme_name;
    std::string ruleset_name;
    std::vector<Charge> initial_v, initial_f;
    std::vector<Charge> final_v, final_f;
    std::vector<Transfer> transfers;
    std::vector<Charge> component_initial, component_final;
    Charge total_initial = 0, total_final = 0;
    bool conservation_ok = false;
};

// Initial charges only; per-component totals must equal the scheme constant
// (they do exactly when the Euler identity held at build time).
inline ChargeLedger initial_charges(const PlaneGraph& g, const ChargeScheme& s) {
    ChargeLedger led;
    led.scheme_name = s.name;
    led.initial_v.resize(g.n());
    led.initial_f.resize(g.faces().size());
    led.component_initial.assign(g.components(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        led.initial_v[v] = s.vertex_coeff * g.degree(v) + s.vertex_off;
        led.component_initial[g.component_of(v)] += led.initial_v[v];
        led.total_initial += led.initial_v[v];
    }
    for (size_t f = 0; f < g.faces().size(); ++f) {
        led.initial_f[f] = s.face_coeff * g.face(static_cast<int>(f)).degree() + s.face_off;
        led.component_initial[g.face(static_cast<int>(f)).component] += led.initial_f[f];
        led.total_initial += led.initial_f[f];
    }
    for (int c = 0; c < g.components(); ++c)
        if (led.component_initial[c] != s.component_total)
            throw Error(ErrorCode::TotalMismatch,
                        "component " + std::to_string(c) + " totals " +
                            charge_str(led.component_initial[c]) + ", expected " +
                            charge_str(s.component_total));
    led.final_v = led.initial_v;
    led.final_f = led.initial_f;
    led.component_final = led.component_initial;
    led.total_final = led.total_initial;
    led.conservation_ok = true;
    return led;
}

// ---------------------------------------------------------------------------
// Rule tables (data-driven). Degree specs: "k", "k+", "k-" = [2,k],
// "k--" = [1,k], "a..b", "any". Face degree-vector patterns anchor the giving
// vertex to one slot; the remaining boundary occurrences must fill the rest.
// "otherwise" rows fire only when no explicit row of the same rule matched.
// Zero-amount rows document excluded cases: they block "otherwise" rows but
// never materialize a transfer.
// ---------------------------------------------------------------------------

struct DegSpec {
    int lo = 1, hi = 1 << 30;
    bool contains(int d) const { return d >= lo && d <= hi; }
};

inline DegSpec parse_degspec(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::MalformedInput, "empty degree spec");
    if (text == "any") return {1, 1 << 30};
    auto dots = text.find("..");
    try {
        if (dots != std::string::npos)
            return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        if (text.size() >= 3 && text.substr(text.size() - 2) == "--")
            return {1, std::stoi(text.substr(0, text.size() - 2))};
        if (text.back() == '+') return {std::stoi(text.substr(0, text.size() - 1)), 1 << 30};
        if (text.back() == '-') return {2, std::stoi(text.substr(0, text.size() - 1))};
        int k = std::stoi(text);
        return {k, k};
    } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedInput, "bad degree spec: " + text);
    }
}

struct RuleCase {
    DegSpec source;                  // giver degree (vertex) or face degree (face-to-face)
    DegSpec sink_degree_v;           // vertex-to-vertex sink degree
    std::string sink_kind;           // "", "simple-3", "simple-2"
    int sink_low3 = -1;              // exact # of degree<=3 neighbors of sink, -1 = any
    int sink_degree_f = -1;          // vertex-to-face sink face degree, -1 = any
    std::vector<int> sink_degrees_f; // face-to-face sink degrees
    std::vector<DegSlot> pattern;    // face degree-vector slots
    int anchor = -1;                 // giver slot index within pattern
    bool otherwise = false;
    std::string sink_n2;             // "", "none", "some"
    std::string via;                 // "", "weak-incidence"
    std::string sink_class;          // "", "bad"
    bool only_one_adjacent = false;
    Charge amount;
    std::string amount_text;
};

struct Rule {
    std::string id;
    std::string kind;  // "vertex-to-vertex" | "vertex-to-face" | "face-to-face"
    std::vector<RuleCase> cases;
};

struct RuleSet {
    std::string name;
    std::string scheme;
    std::vector<Rule> rules;
};

inline RuleSet parse_ruleset(const json& j) {
    RuleSet rs;
    if (!j.is_object() || !j.contains("name") || !j.contains("scheme") || !j.contains("rules"))
        throw Error(ErrorCode::MalformedInput, "ruleset needs name, scheme, rules");
    rs.name = j.at("name").get<std::string>();
    rs.scheme = j.at("scheme").get<std::string>();
    scheme_by_name(rs.scheme);
    for (const auto& jr : j.at("rules")) {
        Rule r;
        r.id = jr.at("id").get<std::string>();
        r.kind = jr.at("kind").get<std::string>();
        if (r.kind != "vertex-to-vertex" && r.kind != "vertex-to-face" &&
            r.kind != "face-to-face")
            throw Error(ErrorCode::MalformedInput, r.id + ": unknown kind " + r.kind);
        for (const auto& jc : jr.at("cases")) {
            RuleCase c;
            if (jc.contains("source")) c.source = parse_degspec(jc.at("source").get<std::string>());
            if (jc.contains("sink_degree_v"))
                c.sink_degree_v = parse_degspec(jc.at("sink_degree_v").get<std::string>());
            if (jc.contains("sink_kind")) c.sink_kind = jc.at("sink_kind").get<std::string>();
            if (jc.contains("sink_low3")) c.sink_low3 = jc.at("sink_low3").get<int>();
            if (jc.contains("sink_degree")) c.sink_degree_f = jc.at("sink_degree").get<int>();
            if (jc.contains("sink_degrees"))
                for (const auto& d : jc.at("sink_degrees")) c.sink_degrees_f.push_back(d.get<int>());
            if (jc.contains("pattern")) {
                for (const auto& s : jc.at("pattern")) {
                    DegSpec ds = parse_degspec(s.get<std::string>());
                    c.pattern.push_back({ds.lo, ds.hi});
                }
                if (!jc.contains("anchor"))
                    throw Error(ErrorCode::MalformedInput, r.id + ": pattern without anchor");
                c.anchor = jc.at("anchor").get<int>();
                if (c.anchor < 0 || c.anchor >= static_cast<int>(c.pattern.size()))
                    throw Error(ErrorCode::MalformedInput, r.id + ": anchor out of range");
                if (c.sink_degree_f >= 0 &&
                    c.sink_degree_f != static_cast<int>(c.pattern.size()))
                    throw Error(ErrorCode::MalformedInput, r.id + ": pattern/sink degree clash");
                if (c.sink_degree_f < 0) c.sink_degree_f = static_cast<int>(c.pattern.size());
            }
            if (jc.contains("otherwise")) c.otherwise = jc.at("otherwise").get<bool>();
            if (jc.contains("sink_n2")) c.sink_n2 = jc.at("sink_n2").get<std::string>();
            if (jc.contains("via")) c.via = jc.at("via").get<std::string>();
            if (jc.contains("sink_class")) c.sink_class = jc.at("sink_class").get<std::string>();
            if (jc.contains("only_one_adjacent"))
                c.only_one_adjacent = jc.at("only_one_adjacent").get<bool>();
            c.amount_text = jc.at("amount").get<std::string>();
            c.amount = parse_charge(c.amount_text);
            if (c.amount < 0)
                throw Error(ErrorCode::MalformedInput, r.id + ": negative amount");
            r.cases.push_back(std::move(c));
        }
        rs.rules.push_back(std::move(r));
    }
    return rs;
}

inline RuleSet load_ruleset_file(const std::string& path) {
    return parse_ruleset(load_json_file(path));
}

namespace detail {

// Anchored pattern match: the giver takes the anchor slot (one of its
// boundary occurrences), the remaining occurrence degrees must fill the rest.
inline bool anchored_pattern_match(const RuleCase& c, int giver_degree,
                                   const std::vector<int>& walk_degrees) {
    if (c.pattern.empty()) return true;
    if (static_cast<int>(walk_degrees.size()) != static_cast<int>(c.pattern.size()))
        return false;
    const DegSlot& a = c.pattern[c.anchor];
    if (giver_degree < a.lo || giver_degree > a.hi) return false;
    std::vector<int> rest = walk_degrees;
    auto it = std::find(rest.begin(), rest.end(), giver_degree);
    if (it == rest.end()) return false;
    rest.erase(it);
    std::vector<DegSlot> slots;
    for (size_t i = 0; i < c.pattern.size(); ++i)
        if (static_cast<int>(i) != c.anchor) slots.push_back(c.pattern[i]);
    return match_degree_multiset(rest, slots);
}

inline bool n2_ok(const RuleCase& c, const FaceProfile& fp) {
    if (c.sink_n2 == "none") return fp.n2 == 0;
    if (c.sink_n2 == "some") return fp.n2 >= 1;
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Rule application. All transfers are computed against the initial state
// (simultaneous discharging); the ledger folds multiplicities into one entry
// per (rule, source, sink) and is sorted by rule declaration order, source,
// sink, which makes it deterministic for a given graph.
// Throws AmbiguousRule if two explicit rows of one rule match the same
// (source, sink) pair with different amounts.
// ---------------------------------------------------------------------------

inline ChargeLedger apply_ruleset(const PlaneGraph& g, const RuleSet& rs,
                                  const StructureProfile* reuse_profile = nullptr) {
    StructureProfile local;
    if (!reuse_profile) {
        local = classify_faces_and_vertices(g);
        reuse_profile = &local;
    }
    const StructureProfile& prof = *reuse_profile;
    const ChargeScheme scheme = scheme_by_name(rs.scheme);
    ChargeLedger led = initial_charges(g, scheme);
    led.ruleset_name = rs.name;

    // Incidence multiplicities vertex -> (face -> occurrences).
    std::vector<std::map<int, int>> vface(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        for (int fid : g.faces_at(v)) vface[v][fid]++;

    std::map<std::pair<ElemId, ElemId>, Charge> folded;  // per rule, reset each rule
    std::vector<Transfer> transfers;

    auto resolve_amount = [&](const Rule& rule, const std::vector<const RuleCase*>& explicit_hits,
                              const std::vector<const RuleCase*>& fallback_hits,
                              const std::string& from, const std::string& to) -> const RuleCase* {
        const std::vector<const RuleCase*>& hits =
            explicit_hits.empty() ? fallback_hits : explicit_hits;
        if (hits.empty()) return nullptr;
        for (const RuleCase* c : hits)
            if (c->amount != hits[0]->amount)
                throw Error(ErrorCode::AmbiguousRule,
                            rule.id + ": " + from + " -> " + to + " matches amounts " +
                                charge_str(hits[0]->amount) + " and " + charge_str(c->amount));
        return hits[0];
    };

    for (size_t ri = 0; ri < rs.rules.size(); ++ri) {
        const Rule& rule = rs.rules[ri];
        folded.clear();
        auto add = [&](ElemId from, ElemId to, const Charge& amt) {
            if (amt == 0) return;
            folded[{from, to}] += amt;
        };

        if (rule.kind == "vertex-to-vertex") {
            for (const auto& e : g.edges()) {
                for (auto [v, u] : {std::pair<Vertex, Vertex>{e.first, e.second},
                                    std::pair<Vertex, Vertex>{e.second, e.first}}) {
                    std::vector<const RuleCase*> hits, fb;
                    for (const RuleCase& c : rule.cases) {
                        if (!c.source.contains(g.degree(v))) continue;
                        if (!c.sink_degree_v.contains(g.degree(u))) continue;
                        if (c.sink_kind == "simple-3" &&
                            prof.vertices[u].kind != VertexKind::Simple3)
                            continue;
                        if (c.sink_kind == "simple-2" &&
                            prof.vertices[u].kind != VertexKind::Simple2)
                            continue;
                        if (c.sink_low3 >= 0 && prof.vertices[u].n_low3_neighbors != c.sink_low3)
                            continue;
                        (c.otherwise ? fb : hits).push_back(&c);
                    }
                    const RuleCase* c = resolve_amount(rule, hits, fb, ElemId{false, v}.str(),
                                                       ElemId{false, u}.str());
                    if (c) add({false, v}, {false, u}, c->amount);
                }
            }
        } else if (rule.kind == "face-to-face") {
            for (const auto& fp : prof.faces) {
                for (const RuleCase& c : rule.cases) {
                    if (!c.source.contains(fp.degree)) continue;
                    std::map<int, int> shared;  // sink face -> shared edge count
                    for (int nb : fp.adjacent_faces) shared[nb]++;
                    for (auto [nb, cnt] : shared) {
                        const FaceProfile& snk = prof.faces[nb];
                        if (!c.sink_degrees_f.empty() &&
                            std::find(c.sink_degrees_f.begin(), c.sink_degrees_f.end(),
                                      snk.degree) == c.sink_degrees_f.end())
                            continue;
                        if (!detail::n2_ok(c, snk)) continue;
                        add({true, fp.id}, {true, nb}, c.amount * cnt);
                    }
                }
            }
        } else {  // vertex-to-face
            // only_one_adjacent rows are resolved per giver after collecting
            // their candidate sinks.
            for (Vertex v = 0; v < g.n(); ++v) {
                std::vector<std::pair<int, const RuleCase*>> cluster_candidates;
                for (auto [fid, mult] : vface[v]) {
                    const FaceProfile& fp = prof.faces[fid];
                    std::vector<const RuleCase*> hits, fb;
                    for (const RuleCase& c : rule.cases) {
                        if (c.via == "weak-incidence") continue;
                        if (!c.source.contains(g.degree(v))) continue;
                        if (c.sink_degree_f >= 0 && fp.degree != c.sink_degree_f) continue;
                        if (c.sink_class == "bad" && !fp.is_bad) continue;
                        if (!detail::n2_ok(c, fp)) continue;
                        if (c.otherwise) {
                            fb.push_back(&c);
                            continue;
                        }
                        if (!detail::anchored_pattern_match(c, g.degree(v), fp.walk_degrees))
                            continue;
                        hits.push_back(&c);
                    }
                    const RuleCase* c = resolve_amount(rule, hits, fb, ElemId{false, v}.str(),
                                                       ElemId{true, fid}.str());
                    if (!c) continue;
                    if (c->only_one_adjacent)
                        cluster_candidates.push_back({fid, c});
                    else
                        add({false, v}, {true, fid}, c->amount * mult);
                }
                if (!cluster_candidates.empty()) {
                    // Cluster v's incident 4-faces by mutual edge-sharing; a
                    // candidate alone in its cluster receives normally, a
                    // clustered group receives once, at its lowest face id.
                    std::vector<int> all4;
                    for (auto [fid, mult] : vface[v])
                        if (prof.faces[fid].degree == 4) all4.push_back(fid);
                    std::map<int, int> comp;
                    for (int f : all4) comp[f] = f;
                    bool changed = true;
                    while (changed) {
                        changed = false;
                        for (int f : all4)
                            for (int nb : prof.faces[f].adjacent_faces)
                                if (comp.count(nb)) {
                                    int a = std::min(comp[f], comp[nb]);
                                    if (comp[f] != a || comp[nb] != a) {
                                        comp[f] = comp[nb] = a;
                                        changed = true;
                                    }
                                }
                    }
                    std::map<int, std::vector<std::pair<int, const RuleCase*>>> groups;
                    for (auto& cand : cluster_candidates) groups[comp[cand.first]].push_back(cand);
                    for (auto& [root, cands] : groups) {
                        int members = 0;
                        for (int f : all4)
                            if (comp[f] == root) ++members;
                        if (members <= 1) {
                            for (auto& [fid, c] : cands)
                                add({false, v}, {true, fid}, c->amount * vface[v][fid]);
                        } else {
                            auto best = *std::min_element(cands.begin(), cands.end());
                            add({false, v}, {true, best.first}, best.second->amount);
                        }
                    }
                }
            }
            // Weak-incidence rows: once per (giver, bad face) pair.
            for (const RuleCase& c : rule.cases) {
                if (c.via != "weak-incidence") continue;
                for (Vertex v = 0; v < g.n(); ++v) {
                    if (!c.source.contains(g.degree(v))) continue;
                    for (int fid : prof.vertices[v].weakly_incident_faces) {
                        const FaceProfile& fp = prof.faces[fid];
                        if (c.sink_class == "bad" && !fp.is_bad) continue;
                        if (c.sink_degree_f >= 0 && fp.degree != c.sink_degree_f) continue;
                        if (!detail::n2_ok(c, fp)) continue;
                        add({false, v}, {true, fid}, c.amount);
                    }
                }
            }
        }

        for (const auto& [key, amt] : folded)
            transfers.push_back({static_cast<int>(ri), rule.id, key.first, key.second, amt});
    }

    std::sort(transfers.begin(), transfers.end());
    led.transfers = std::move(transfers);

    for (const Transfer& t : led.transfers) {
        Charge& from = t.from.is_face ? led.final_f[t.from.id] : led.final_v[t.from.id];
        Charge& to = t.to.is_face ? led.final_f[t.to.id] : led.final_v[t.to.id];
        from -= t.amount;
        to += t.amount;
    }
    led.component_final.assign(g.components(), 0);
    led.total_final = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        led.component_final[g.component_of(v)] += led.final_v[v];
        led.total_final += led.final_v[v];
    }
    for (size_t f = 0; f < g.faces().size(); ++f) {
        led.component_final[g.face(static_cast<int>(f)).component] += led.final_f[f];
        led.total_final += led.final_f[f];
    }
    led.conservation_ok = (led.total_final == led.total_initial);
    for (int c = 0; c < g.components(); ++c)
        led.conservation_ok &= (led.component_final[c] == led.component_initial[c]);
    return led;
}

// ---------------------------------------------------------------------------
// Audit: lists every element that ends negative and classifies it against the
// allowed exception budget. budget_exceeds_total reproduces the closing step
// of a discharging argument: no unexplained negatives and the worst-case
// exception budget still sums above the required total, so a graph satisfying
// the premises cannot exist.
// ---------------------------------------------------------------------------

struct AuditAllowances {
    bool special3 = true;      // special 3-vertices may end at -1
    bool special_faces = true; // (3,3,5+) >= -2; (3,4,4..6) >= -7/3
    bool special2 = true;      // special 2-vertices may end at -4
    bool one_vertices = true;  // 1-vertices may end at -7
};

struct AuditEntry {
    ElemId elem;
    Charge final_charge;
    bool allowed = false;
    std::string exception_kind;
    Charge bound = 0;
};

struct AuditReport {
    std::vector<AuditEntry> negatives;
    int unexplained = 0;
    Charge allowed_bound_sum = 0;
    Charge required_total = 0;  // scheme constant x components
    bool conservation_ok = false;
    bool budget_exceeds_total = false;
};

inline AuditReport audit_charges(const PlaneGraph& g, const StructureProfile& prof,
                                 const ChargeLedger& led,
                                 const AuditAllowances& allow = {}) {
    AuditReport rep;
    rep.conservation_ok = led.conservation_ok;
    rep.required_total = scheme_by_name(led.scheme_name).component_total * g.components();

    auto classify = [&](ElemId id, const Charge& fin) {
        AuditEntry e{id, fin, false, "", 0};
        if (!id.is_face) {
            const VertexProfile& vp = prof.vertices[id.id];
            if (allow.special3 && vp.kind == VertexKind::Special3 && fin >= -1) {
                e.allowed = true;
                e.exception_kind = "special-3-vertex";
                e.bound = -1;
            } else if (allow.special2 && vp.kind == VertexKind::Special2 && fin >= -4) {
                e.allowed = true;
                e.exception_kind = "special-2-vertex";
                e.bound = -4;
            } else if (allow.one_vertices && vp.degree == 1 && fin >= -7) {
                e.allowed = true;
                e.exception_kind = "1-vertex";
                e.bound = -7;
            }
        } else {
            const FaceProfile& fp = prof.faces[id.id];
            if (allow.special_faces && fp.is_special) {
                Charge bound = fp.special_kind == "(3,3,5+)" ? Charge(-2) : Charge(-7) / 3;
                if (fin >= bound) {
                    e.allowed = true;
                    e.exception_kind = "special-face" + fp.special_kind;
                    e.bound = bound;
                }
            }
        }
        if (e.allowed)
            rep.allowed_bound_sum += e.bound;
        else
            ++rep.unexplained;
        rep.negatives.push_back(std::move(e));
    };

    for (Vertex v = 0; v < g.n(); ++v)
        if (led.final_v[v] < 0) classify({false, v}, led.final_v[v]);
    for (size_t f = 0; f < g.faces().size(); ++f)
        if (led.final_f[f] < 0) classify({true, static_cast<int>(f)}, led.final_f[f]);

    rep.budget_exceeds_total =
        rep.unexplained == 0 && rep.allowed_bound_sum > rep.required_total;
    return rep;
}

// ---------------------------------------------------------------------------
// JSON views (used by the CLI and by determinism checks).
// ---------------------------------------------------------------------------

inline json ledger_to_json(const ChargeLedger& led) {
    json j;
    j["scheme"] = led.scheme_name;
    j["ruleset"] = led.ruleset_name;
    json iv = json::array(), fv = json::array(), ivf = json::array(), fvf = json::array();
    for (const auto& c : led.initial_v) iv.push_back(charge_str(c));
    for (const auto& c : led.initial_f) ivf.push_back(charge_str(c));
    for (const auto& c : led.final_v) fv.push_back(charge_str(c));
    for (const auto& c : led.final_f) fvf.push_back(charge_str(c));
    j["initial"] = {{"vertices", iv}, {"faces", ivf}};
    json tr = json::array();
    for (const auto& t : led.transfers)
        tr.push_back({{"rule", t.rule},
                      {"from", t.from.str()},
                      {"to", t.to.str()},
                      {"amount", charge_str(t.amount)}});
    j["transfers"] = std::move(tr);
    j["final"] = {{"vertices", fv}, {"faces", fvf}};
    json ct = json::array();
    for (const auto& c : led.component_final) ct.push_back(charge_str(c));
    j["component_totals"] = std::move(ct);
    j["total"] = charge_str(led.total_final);
    j["conservation_ok"] = led.conservation_ok;
    return j;
}

inline json audit_to_json(const AuditReport& rep) {
    json j;
    json neg = json::array();
    for (const auto& e : rep.negatives) {
        json je;
        je["element"] = e.elem.str();
        je["final"] = charge_str(e.final_charge);
        je["allowed"] = e.allowed;
        if (e.allowed) {
            je["exception"] = e.exception_kind;
            je["bound"] = charge_str(e.bound);
        }
        neg.push_back(std::move(je));
    }
    j["negatives"] = std::move(neg);
    j["unexplained"] = rep.unexplained;
    j["allowed_bound_sum"] = charge_str(rep.allowed_bound_sum);
    j["required_total"] = charge_str(rep.required_total);
    j["conservation_ok"] = rep.conservation_ok;
    j["budget_exceeds_total"] = rep.budget_exceeds_total;
    return j;
}

} // namespace planecol
