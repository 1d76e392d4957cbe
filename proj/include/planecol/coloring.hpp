#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planecol/error.hpp"
#include "planecol/graph_json.hpp"
#include "planecol/plane_graph.hpp"
#include "planecol/reducible.hpp"
#include "planecol/structure.hpp"

namespace planecol {

// ---------------------------------------------------------------------------
// Equitable colorings: proper, and all class sizes within one of each other.
// Colors are 1..k. List colorings use arbitrary positive ints as colors and
// cap every color's usage at ceil(n/k) instead of balancing.
// ---------------------------------------------------------------------------

struct EquitableColoring {
    int k = 0;
    std::vector<int> assignment;   // vertex -> color in 1..k
    std::vector<int> class_sizes;  // index 1..k
};

struct ListAssignment {
    int k = 0;
    std::vector<std::vector<int>> lists;  // per vertex, sorted ascending
};

struct EquitableListColoring {
    int k = 0;
    std::vector<int> assignment;  // vertex -> color from its list
    std::map<int, int> usage;     // color -> count
};

struct ColoringValidation {
    bool ok = true;
    std::string violation;  // first violation, empty when ok
};

// ---------------------------------------------------------------------------
// Validators. Deliberately plain edge/count scans, independent of any solver
// logic, so they can act as the acceptance oracle for everything else.
// ---------------------------------------------------------------------------

inline ColoringValidation validate_coloring(const PlaneGraph& g, int k,
                                            const std::vector<int>& assignment) {
    ColoringValidation r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.violation = why;
        return r;
    };
    if (static_cast<int>(assignment.size()) != g.n())
        return fail("assignment covers " + std::to_string(assignment.size()) + " of " +
                    std::to_string(g.n()) + " vertices");
    for (Vertex v = 0; v < g.n(); ++v)
        if (assignment[v] < 1 || assignment[v] > k)
            return fail("vertex " + std::to_string(v) + " has color " +
                        std::to_string(assignment[v]) + " outside 1.." + std::to_string(k));
    for (const auto& e : g.edges())
        if (assignment[e.first] == assignment[e.second])
            return fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        ") is monochromatic in color " + std::to_string(assignment[e.first]));
    std::vector<int> sizes(k + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) sizes[assignment[v]]++;
    int lo = g.n(), hi = 0;
    for (int c = 1; c <= k; ++c) {
        lo = std::min(lo, sizes[c]);
        hi = std::max(hi, sizes[c]);
    }
    if (hi - lo > 1)
        return fail("class sizes range from " + std::to_string(lo) + " to " + std::to_string(hi));
    return r;
}

inline ColoringValidation validate_list_coloring(const PlaneGraph& g, const ListAssignment& L,
                                                 const std::vector<int>& assignment) {
    ColoringValidation r;
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.violation = why;
        return r;
    };
    if (static_cast<int>(assignment.size()) != g.n()) return fail("assignment size mismatch");
    if (static_cast<int>(L.lists.size()) != g.n()) return fail("list assignment size mismatch");
    for (Vertex v = 0; v < g.n(); ++v)
        if (static_cast<int>(L.lists[v].size()) != L.k)
            return fail("list of vertex " + std::to_string(v) + " is not " +
                        std::to_string(L.k) + "-uniform");
    for (Vertex v = 0; v < g.n(); ++v)
        if (!std::binary_search(L.lists[v].begin(), L.lists[v].end(), assignment[v]))
            return fail("vertex " + std::to_string(v) + " colored " +
                        std::to_string(assignment[v]) + " outside its list");
    for (const auto& e : g.edges())
        if (assignment[e.first] == assignment[e.second])
            return fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        ") is monochromatic");
    int cap = L.k > 0 ? (g.n() + L.k - 1) / L.k : 0;
    std::map<int, int> usage;
    for (Vertex v = 0; v < g.n(); ++v) usage[assignment[v]]++;
    for (const auto& [c, cnt] : usage)
        if (cnt > cap)
            return fail("color " + std::to_string(c) + " used " + std::to_string(cnt) +
                        " times, cap " + std::to_string(cap));
    return r;
}

// ---------------------------------------------------------------------------
// Exact equitable solver: complete backtracking with class caps ceil(n/k),
// floor-fill pruning, and new-color symmetry breaking. n <= k short-circuits
// to a rainbow coloring.
// ---------------------------------------------------------------------------

inline std::optional<EquitableColoring> exact_equitable(const PlaneGraph& g, int k,
                                                        int size_limit = 16) {
    if (k < 1) throw Error(ErrorCode::MalformedInput, "k must be positive");
    const int n = g.n();
    if (n <= k) {
        EquitableColoring col;
        col.k = k;
        col.assignment.resize(n);
        col.class_sizes.assign(k + 1, 0);
        for (Vertex v = 0; v < n; ++v) {
            col.assignment[v] = v + 1;
            col.class_sizes[v + 1] = 1;
        }
        return col;
    }
    if (n > size_limit)
        throw Error(ErrorCode::SizeLimit, "exact search limited to " +
                                              std::to_string(size_limit) + " vertices, got " +
                                              std::to_string(n));
    const int cap = (n + k - 1) / k;
    const int floor_need = n / k;

    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> color(n, 0);
    std::vector<int> sizes(k + 1, 0);
    int used = 0;

    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        Vertex v = order[idx];
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (sizes[c] >= cap) continue;
            bool clash = false;
            for (Vertex u : g.neighbors(v))
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            sizes[c]++;
            bool opened = (c == used + 1);
            if (opened) ++used;
            // Every color must still be able to reach floor_need members.
            long deficit = 0;
            for (int cc = 1; cc <= used; ++cc) deficit += std::max(0, floor_need - sizes[cc]);
            deficit += static_cast<long>(k - used) * floor_need;
            if (deficit <= n - idx - 1 && rec(idx + 1)) return true;
            if (opened) --used;
            sizes[c]--;
            color[v] = 0;
        }
        return false;
    };

    if (!rec(0)) return std::nullopt;
    EquitableColoring col;
    col.k = k;
    col.assignment = color;
    col.class_sizes = sizes;
    return col;
}

inline int chi_e(const PlaneGraph& g, int size_limit = 16) {
    for (int k = 1; k <= std::max(1, g.n()); ++k)
        if (exact_equitable(g, k, size_limit)) return k;
    return g.n();
}

// Smallest k such that every l >= k admits an equitable l-coloring. For
// l > Delta+1 feasibility is automatic; the Delta+1 endpoint itself is
// re-established by the exact solver rather than assumed.
inline int chi_star_e(const PlaneGraph& g, int size_limit = 16) {
    int top = g.max_degree() + 1;
    int last_infeasible = 0;
    for (int l = 1; l <= top; ++l)
        if (!exact_equitable(g, l, size_limit)) last_infeasible = l;
    if (last_infeasible == top)
        throw Error(ErrorCode::PreconditionViolated,
                    "graph is not equitably (Delta+1)-colorable; no finite threshold here");
    return last_infeasible + 1;
}

// ---------------------------------------------------------------------------
// Exact equitable list solver: backtracking with per-color usage caps and a
// fewest-choices-first vertex order. cap <= 0 means ceil(n/k).
// ---------------------------------------------------------------------------

inline std::optional<std::vector<int>> exact_equitable_list(const PlaneGraph& g,
                                                            const ListAssignment& L,
                                                            int cap = 0, int size_limit = 16) {
    const int n = g.n();
    if (static_cast<int>(L.lists.size()) != n)
        throw Error(ErrorCode::MalformedInput, "list assignment size mismatch");
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(L.lists[v].size()) != L.k)
            throw Error(ErrorCode::NotUniform,
                        "list of vertex " + std::to_string(v) + " has " +
                            std::to_string(L.lists[v].size()) + " colors, expected " +
                            std::to_string(L.k));
    if (n > std::max(size_limit, L.k))
        throw Error(ErrorCode::SizeLimit, "exact list search limited to " +
                                              std::to_string(std::max(size_limit, L.k)) +
                                              " vertices, got " + std::to_string(n));
    if (cap <= 0) cap = L.k > 0 ? (n + L.k - 1) / L.k : 0;

    std::vector<int> color(n, 0);
    std::map<int, int> usage;

    auto feasible_count = [&](Vertex v) {
        int cnt = 0;
        for (int c : L.lists[v]) {
            if (usage[c] >= cap) continue;
            bool clash = false;
            for (Vertex u : g.neighbors(v))
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (!clash) ++cnt;
        }
        return cnt;
    };

    std::function<bool(int)> rec = [&](int placed) -> bool {
        if (placed == n) return true;
        Vertex v = -1;
        int v_choices = 1 << 30;
        for (Vertex u = 0; u < n; ++u) {
            if (color[u] != 0) continue;
            int c = feasible_count(u);
            if (c == 0) return false;
            if (c < v_choices) {
                v = u;
                v_choices = c;
            }
        }
        for (int c : L.lists[v]) {
            if (usage[c] >= cap) continue;
            bool clash = false;
            for (Vertex u : g.neighbors(v))
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            usage[c]++;
            if (rec(placed + 1)) return true;
            usage[c]--;
            color[v] = 0;
        }
        return false;
    };

    if (!rec(0)) return std::nullopt;
    return color;
}

// ---------------------------------------------------------------------------
// The extension step. Given a verified reducible set and an equitable
// k-coloring of G - S, color x_1..x_k in ascending order, each with the
// lowest color not on an outside neighbor and not yet used inside S: the set
// receives k distinct colors and every class grows by exactly one.
// ---------------------------------------------------------------------------

inline EquitableColoring extend_coloring(const PlaneGraph& g, const ReducibleSet& S,
                                         const std::vector<int>& base) {
    const int k = S.k;
    ReducibleVerification rv = verify_reducible(g, S.order, k);
    if (!rv.ok)
        throw Error(ErrorCode::PreconditionViolated,
                    "set is not reducible: x_" + std::to_string(rv.violation_index) + " has " +
                        std::to_string(rv.violation_count) + " outside neighbors");
    if (static_cast<int>(base.size()) != g.n())
        throw Error(ErrorCode::PreconditionViolated, "base coloring size mismatch");
    std::set<Vertex> members(S.order.begin(), S.order.end());
    std::vector<int> sizes(k + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (members.count(v)) {
            if (base[v] != -1)
                throw Error(ErrorCode::PreconditionViolated,
                            "base colors vertex " + std::to_string(v) + " inside S");
            continue;
        }
        if (base[v] < 1 || base[v] > k)
            throw Error(ErrorCode::PreconditionViolated,
                        "base leaves vertex " + std::to_string(v) + " uncolored");
        sizes[base[v]]++;
    }
    for (const auto& e : g.edges())
        if (!members.count(e.first) && !members.count(e.second) &&
            base[e.first] == base[e.second])
            throw Error(ErrorCode::PreconditionViolated, "base coloring is not proper on G-S");
    {
        int lo = 1 << 30, hi = 0;
        for (int c = 1; c <= k; ++c) {
            lo = std::min(lo, sizes[c]);
            hi = std::max(hi, sizes[c]);
        }
        if (g.n() > k && hi - lo > 1)
            throw Error(ErrorCode::PreconditionViolated, "base coloring is not balanced on G-S");
    }

    std::vector<int> full = base;
    std::vector<bool> used_in_S(k + 1, false);
    for (int i = 0; i < k; ++i) {
        Vertex x = S.order[i];
        std::vector<bool> forbidden = used_in_S;
        for (Vertex u : g.neighbors(x))
            if (!members.count(u)) forbidden[full[u]] = true;
        int c = 1;
        while (c <= k && forbidden[c]) ++c;
        if (c > k)
            throw Error(ErrorCode::PreconditionViolated,
                        "no admissible color for x_" + std::to_string(i + 1));
        full[x] = c;
        used_in_S[c] = true;
        sizes[c]++;
    }
    EquitableColoring col;
    col.k = k;
    col.assignment = full;
    col.class_sizes = sizes;
    return col;
}

inline std::vector<int> extend_list_coloring(const PlaneGraph& g, const ReducibleSet& S,
                                             const std::vector<int>& base,
                                             const ListAssignment& L) {
    const int k = S.k;
    ReducibleVerification rv = verify_reducible(g, S.order, k);
    if (!rv.ok) throw Error(ErrorCode::PreconditionViolated, "set is not reducible");
    if (static_cast<int>(base.size()) != g.n() || static_cast<int>(L.lists.size()) != g.n())
        throw Error(ErrorCode::PreconditionViolated, "base or list size mismatch");
    std::set<Vertex> members(S.order.begin(), S.order.end());
    for (Vertex v = 0; v < g.n(); ++v)
        if (!members.count(v) && base[v] == 0)
            throw Error(ErrorCode::PreconditionViolated,
                        "base leaves vertex " + std::to_string(v) + " uncolored");

    std::vector<int> full = base;
    std::set<int> used_in_S;
    for (int i = 0; i < k; ++i) {
        Vertex x = S.order[i];
        std::set<int> forbidden = used_in_S;
        for (Vertex u : g.neighbors(x))
            if (!members.count(u)) forbidden.insert(full[u]);
        int chosen = 0;
        for (int c : L.lists[x])
            if (!forbidden.count(c)) {
                chosen = c;
                break;
            }
        if (chosen == 0)
            throw Error(ErrorCode::PreconditionViolated,
                        "no admissible list color for x_" + std::to_string(i + 1));
        full[x] = chosen;
        used_in_S.insert(chosen);
    }
    return full;
}

// ---------------------------------------------------------------------------
// Constructive recursion: peel a reducible set, solve the remainder, extend.
// Base case: n <= max(k, 12) goes to the exact solver. A failed search on a
// certified member is recorded as an anomaly and the exact solver takes over
// (which may throw SizeLimit on large graphs).
// ---------------------------------------------------------------------------

struct ConstructiveOptions {
    bool override_preconditions = false;  // allow non-members / small k
    int base_threshold = 12;              // exact solver below max(k, this)
    FindOptions find;
};

struct ConstructiveColoring {
    EquitableColoring coloring;
    int levels = 0;  // reducible sets peeled
    std::vector<std::string> anomalies;
};

namespace detail {

inline void check_constructive_preconditions(const PlaneGraph& g, int k,
                                             const ConstructiveOptions& opts) {
    if (opts.override_preconditions) return;
    if (k < std::max(7, g.max_degree()))
        throw Error(ErrorCode::PreconditionViolated,
                    "k = " + std::to_string(k) + " below max{7, Delta} = " +
                        std::to_string(std::max(7, g.max_degree())));
    ClassReport cr = class_membership(g);
    if (!cr.is_member)
        throw Error(ErrorCode::PreconditionViolated,
                    "graph is not a class member (use the override to force)");
}

} // namespace detail

inline ConstructiveColoring color_constructive(const PlaneGraph& g, int k,
                                               const std::vector<Configuration>& catalog = {},
                                               const ConstructiveOptions& opts = {}) {
    detail::check_constructive_preconditions(g, k, opts);
    ConstructiveColoring out;

    std::function<std::vector<int>(const PlaneGraph&)> solve =
        [&](const PlaneGraph& cur) -> std::vector<int> {
        if (cur.n() <= std::max(k, opts.base_threshold)) {
            auto col = exact_equitable(cur, k, std::max(k, opts.base_threshold));
            if (!col)
                throw Error(ErrorCode::PreconditionViolated,
                            "exact base case found no equitable coloring");
            return col->assignment;
        }
        FindReducibleResult fr = find_reducible_set(cur, k, catalog, opts.find);
        for (const auto& a : fr.anomalies) out.anomalies.push_back(a);
        if (!fr.found) {
            out.anomalies.push_back("no reducible set found on " + std::to_string(cur.n()) +
                                    " vertices; exact fallback engaged");
            auto col = exact_equitable(cur, k);  // may throw SizeLimit
            if (!col)
                throw Error(ErrorCode::PreconditionViolated,
                            "exact fallback found no equitable coloring");
            return col->assignment;
        }
        ++out.levels;
        std::set<Vertex> members(fr.set.order.begin(), fr.set.order.end());
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < cur.n(); ++v)
            if (!members.count(v)) keep.push_back(v);
        InducedSubgraph sub = induced_subgraph(cur, keep);
        std::vector<int> sub_col = solve(sub.graph);
        std::vector<int> base(cur.n(), -1);
        for (size_t i = 0; i < sub.old_ids.size(); ++i) base[sub.old_ids[i]] = sub_col[i];
        return extend_coloring(cur, fr.set, base).assignment;
    };

    std::vector<int> assignment = solve(g);
    out.coloring.k = k;
    out.coloring.assignment = assignment;
    out.coloring.class_sizes.assign(k + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) out.coloring.class_sizes[assignment[v]]++;
    return out;
}

struct ConstructiveListColoring {
    EquitableListColoring coloring;
    int levels = 0;
    std::vector<std::string> anomalies;
};

inline ConstructiveListColoring list_color_constructive(
    const PlaneGraph& g, const ListAssignment& L,
    const std::vector<Configuration>& catalog = {}, const ConstructiveOptions& opts = {}) {
    const int k = L.k;
    if (static_cast<int>(L.lists.size()) != g.n())
        throw Error(ErrorCode::MalformedInput, "list assignment size mismatch");
    for (Vertex v = 0; v < g.n(); ++v)
        if (static_cast<int>(L.lists[v].size()) != k)
            throw Error(ErrorCode::NotUniform,
                        "list of vertex " + std::to_string(v) + " is not " + std::to_string(k) +
                            "-uniform");
    detail::check_constructive_preconditions(g, k, opts);
    ConstructiveListColoring out;

    // Identical lists reduce to the plain equitable case, whose output is
    // both balanced and cap-respecting.
    bool identical = g.n() > 0;
    for (Vertex v = 1; v < g.n() && identical; ++v) identical = (L.lists[v] == L.lists[0]);
    if (identical && g.n() > 0) {
        ConstructiveColoring plain =
            color_constructive(g, k, catalog, opts);
        out.levels = plain.levels;
        out.anomalies = plain.anomalies;
        out.coloring.k = k;
        out.coloring.assignment.resize(g.n());
        for (Vertex v = 0; v < g.n(); ++v) {
            int c = L.lists[0][plain.coloring.assignment[v] - 1];
            out.coloring.assignment[v] = c;
            out.coloring.usage[c]++;
        }
        return out;
    }

    std::function<std::vector<int>(const PlaneGraph&, const ListAssignment&)> solve =
        [&](const PlaneGraph& cur, const ListAssignment& lists) -> std::vector<int> {
        if (cur.n() <= std::max(k, opts.base_threshold)) {
            auto col = exact_equitable_list(cur, lists, 0, std::max(k, opts.base_threshold));
            if (!col)
                throw Error(ErrorCode::PreconditionViolated,
                            "exact list base case found no equitable list coloring");
            return *col;
        }
        FindReducibleResult fr = find_reducible_set(cur, k, catalog, opts.find);
        for (const auto& a : fr.anomalies) out.anomalies.push_back(a);
        if (!fr.found) {
            out.anomalies.push_back("no reducible set found on " + std::to_string(cur.n()) +
                                    " vertices; exact list fallback engaged");
            auto col = exact_equitable_list(cur, lists);  // may throw SizeLimit
            if (!col)
                throw Error(ErrorCode::PreconditionViolated,
                            "exact list fallback found no equitable list coloring");
            return *col;
        }
        ++out.levels;
        std::set<Vertex> members(fr.set.order.begin(), fr.set.order.end());
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < cur.n(); ++v)
            if (!members.count(v)) keep.push_back(v);
        InducedSubgraph sub = induced_subgraph(cur, keep);
        ListAssignment sub_lists;
        sub_lists.k = k;
        for (Vertex old : sub.old_ids) sub_lists.lists.push_back(lists.lists[old]);
        std::vector<int> sub_col = solve(sub.graph, sub_lists);
        std::vector<int> base(cur.n(), 0);
        for (size_t i = 0; i < sub.old_ids.size(); ++i) base[sub.old_ids[i]] = sub_col[i];
        return extend_list_coloring(cur, fr.set, base, lists);
    };

    std::vector<int> assignment = solve(g, L);
    out.coloring.k = k;
    out.coloring.assignment = assignment;
    for (Vertex v = 0; v < g.n(); ++v) out.coloring.usage[assignment[v]]++;
    return out;
}

// ---------------------------------------------------------------------------
// List plumbing: JSON files { "<vertex>": [colors...] } and seeded random
// k-uniform lists over a palette 1..palette_size (own Fisher-Yates so results
// are identical across standard libraries).
// ---------------------------------------------------------------------------

inline ListAssignment lists_from_json(const json& j, int n) {
    ListAssignment L;
    if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "lists file must be an object");
    L.lists.resize(n);
    std::vector<bool> seen(n, false);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v;
        try {
            v = std::stoi(it.key());
        } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedInput, "bad vertex key: " + it.key());
        }
        if (v < 0 || v >= n)
            throw Error(ErrorCode::MalformedInput, "vertex key out of range: " + it.key());
        std::vector<int> lst;
        for (const auto& c : it.value()) lst.push_back(c.get<int>());
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        L.lists[v] = std::move(lst);
        seen[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw Error(ErrorCode::MalformedInput,
                                  "no list for vertex " + std::to_string(v));
    L.k = n > 0 ? static_cast<int>(L.lists[0].size()) : 0;
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(L.lists[v].size()) != L.k)
            throw Error(ErrorCode::NotUniform, "lists are not uniform");
    return L;
}

inline json lists_to_json(const ListAssignment& L) {
    json j = json::object();
    for (size_t v = 0; v < L.lists.size(); ++v) {
        json arr = json::array();
        for (int c : L.lists[v]) arr.push_back(c);
        j[std::to_string(v)] = std::move(arr);
    }
    return j;
}

inline ListAssignment random_uniform_lists(int n, int k, int palette_size, unsigned seed) {
    if (palette_size < k)
        throw Error(ErrorCode::MalformedInput, "palette smaller than list size");
    std::mt19937 rng(seed);
    ListAssignment L;
    L.k = k;
    L.lists.resize(n);
    std::vector<int> palette(palette_size);
    for (int i = 0; i < palette_size; ++i) palette[i] = i + 1;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(i, palette_size - 1);
            std::swap(palette[i], palette[pick(rng)]);
        }
        L.lists[v].assign(palette.begin(), palette.begin() + k);
        std::sort(L.lists[v].begin(), L.lists[v].end());
    }
    return L;
}

inline json coloring_to_json(const EquitableColoring& col) {
    json j;
    j["k"] = col.k;
    json a = json::array();
    for (int c : col.assignment) a.push_back(c);
    j["assignment"] = std::move(a);
    json s = json::array();
    for (int c = 1; c <= col.k; ++c) s.push_back(col.class_sizes[c]);
    j["class_sizes"] = std::move(s);
    return j;
}

} // namespace planecol
