#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "planecol/configuration.hpp"
#include "planecol/error.hpp"
#include "planecol/plane_graph.hpp"

namespace planecol {

// ---------------------------------------------------------------------------
// Reducible vertex sets. S = x_1..x_k (order[0] = x_1, order[k-1] = x_k) is
// reducible when |N(x_i) \ S| <= k - i for every i: an equitable k-coloring
// of G - S then extends greedily from x_1 upward, putting one x_i into each
// color class.
// ---------------------------------------------------------------------------

struct ReducibleSet {
    int k = 0;
    std::vector<Vertex> order;        // order[i] = x_{i+1}
    std::vector<int> outside_counts;  // |N(x_{i+1}) \ S|
};

struct ReducibleVerification {
    bool ok = false;
    ReducibleSet set;
    int violation_index = -1;  // 1-based x_i index of the first violation
    int violation_count = -1;
};

inline ReducibleVerification verify_reducible(const PlaneGraph& g,
                                              const std::vector<Vertex>& order, int k) {
    if (static_cast<int>(order.size()) != k)
        throw Error(ErrorCode::WrongSize, "expected " + std::to_string(k) + " vertices, got " +
                                              std::to_string(order.size()));
    std::set<Vertex> members;
    for (Vertex v : order) {
        if (v < 0 || v >= g.n())
            throw Error(ErrorCode::MalformedInput, "vertex out of range: " + std::to_string(v));
        if (!members.insert(v).second)
            throw Error(ErrorCode::DuplicateVertex, "repeated vertex: " + std::to_string(v));
    }
    ReducibleVerification res;
    res.set.k = k;
    res.set.order = order;
    res.ok = true;
    for (int i = 0; i < k; ++i) {
        int outside = 0;
        for (Vertex u : g.neighbors(order[i]))
            if (!members.count(u)) ++outside;
        res.set.outside_counts.push_back(outside);
        if (res.ok && outside > k - (i + 1)) {
            res.ok = false;
            res.violation_index = i + 1;
            res.violation_count = outside;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Completion. Free positions are filled from the highest index downward with
// a minimum-degree vertex of the graph left after deleting everything chosen
// so far; ties break to the lowest vertex id.
// ---------------------------------------------------------------------------

// partial[i] is the host for x_{i+1}, or -1 if free.
inline std::vector<Vertex> complete_assignment(const PlaneGraph& g,
                                               std::vector<Vertex> partial) {
    const int k = static_cast<int>(partial.size());
    if (k > g.n())
        throw Error(ErrorCode::GraphTooSmall,
                    "need " + std::to_string(k) + " vertices, graph has " + std::to_string(g.n()));
    std::vector<bool> chosen(g.n(), false);
    for (Vertex v : partial) {
        if (v < 0) continue;
        if (v >= g.n())
            throw Error(ErrorCode::MalformedInput, "vertex out of range: " + std::to_string(v));
        if (chosen[v])
            throw Error(ErrorCode::DuplicateVertex, "repeated vertex: " + std::to_string(v));
        chosen[v] = true;
    }
    for (int pos = k - 1; pos >= 0; --pos) {
        if (partial[pos] >= 0) continue;
        Vertex best = -1;
        int best_deg = -1;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (chosen[v]) continue;
            int d = 0;
            for (Vertex u : g.neighbors(v))
                if (!chosen[u]) ++d;
            if (best < 0 || d < best_deg) {
                best = v;
                best_deg = d;
            }
        }
        partial[pos] = best;
        chosen[best] = true;
    }
    return partial;
}

// seed[j] occupies x_{k-j}: the seed fills the top positions in given order.
inline std::vector<Vertex> complete_seed(const PlaneGraph& g, const std::vector<Vertex>& seed,
                                         int k) {
    if (static_cast<int>(seed.size()) > k)
        throw Error(ErrorCode::WrongSize, "seed larger than k");
    std::vector<Vertex> partial(k, -1);
    for (size_t j = 0; j < seed.size(); ++j) partial[k - 1 - j] = seed[j];
    return complete_assignment(g, std::move(partial));
}

// ---------------------------------------------------------------------------
// Finder. Strategy order: (1) catalog configurations — each match pins its
// labelled vertices to their indices, the rest is completed; (2) the empty
// seed; (3) ordered seeds of size <= max_seed_size drawn from the lowest-
// degree vertices; (4) bounded exhaustive search over k-subsets (a subset
// admits a valid order iff sorting by outside-degree ascending from the top
// position works). Everything is deterministic; the first accepted set wins.
// ---------------------------------------------------------------------------

struct FindOptions {
    int pool_cap = 40;          // candidate pool: lowest-degree vertices
    int pool_max_degree = 5;    // only vertices of at most this degree seed the search
    int max_seed_size = 5;
    long seed_budget = 20000;   // max completions attempted in the seed stage
    long exact_budget = 5000000;  // max k-subsets examined in the exact stage
};

struct FindReducibleResult {
    bool found = false;
    ReducibleSet set;
    std::string method;  // "catalog:<name>" | "empty-seed" | "seed" | "exact-subset"
    long attempts = 0;
    std::vector<std::string> anomalies;
};

namespace detail {

// "x_k" -> k, "x_k-3" -> k-3, "x_2" -> 2; -1 when the label pins no index.
inline int label_position(const std::string& label, int k) {
    if (label.rfind("x_", 0) != 0) return -1;
    std::string rest = label.substr(2);
    try {
        if (rest == "k") return k;
        if (rest.rfind("k-", 0) == 0) return k - std::stoi(rest.substr(2));
        return std::stoi(rest);
    } catch (const std::exception&) {
        return -1;
    }
}

inline bool try_candidate(const PlaneGraph& g, int k, const std::vector<Vertex>& order,
                          FindReducibleResult& out, const std::string& method) {
    ReducibleVerification v = verify_reducible(g, order, k);
    if (!v.ok) return false;
    out.found = true;
    out.set = v.set;
    out.method = method;
    return true;
}

} // namespace detail

inline FindReducibleResult find_reducible_set(const PlaneGraph& g, int k,
                                              const std::vector<Configuration>& catalog = {},
                                              const FindOptions& opts = {}) {
    FindReducibleResult res;
    if (k <= 0 || k > g.n()) return res;

    // Stage 1: catalog configurations.
    for (const Configuration& cfg : catalog) {
        if (!cfg.complete) continue;
        std::vector<std::vector<Vertex>> matches;
        try {
            matches = find_configuration_matches(g, cfg);
        } catch (const Error&) {
            continue;
        }
        for (const auto& img : matches) {
            std::vector<Vertex> partial(k, -1);
            bool usable = true;
            for (size_t i = 0; i < cfg.vertices.size() && usable; ++i) {
                int pos = detail::label_position(cfg.vertices[i].name, k);
                if (pos < 1 || pos > k) {
                    usable = false;  // label outside the index range for this k
                    break;
                }
                Vertex h = img[i];
                if (partial[pos - 1] == h) continue;
                if (partial[pos - 1] != -1) {
                    usable = false;
                    break;
                }
                for (int p = 0; p < k; ++p)
                    if (partial[p] == h) usable = false;  // two labels, one host
                if (usable) partial[pos - 1] = h;
            }
            if (!usable) continue;
            ++res.attempts;
            std::vector<Vertex> order;
            try {
                order = complete_assignment(g, partial);
            } catch (const Error&) {
                continue;
            }
            if (detail::try_candidate(g, k, order, res, "catalog:" + cfg.name)) return res;
        }
    }

    // Stage 2: the empty seed.
    {
        ++res.attempts;
        std::vector<Vertex> order = complete_assignment(g, std::vector<Vertex>(k, -1));
        if (detail::try_candidate(g, k, order, res, "empty-seed")) return res;
    }

    // Stage 3: ordered low-degree seeds.
    {
        std::vector<Vertex> pool;
        for (Vertex v = 0; v < g.n(); ++v)
            if (g.degree(v) <= opts.pool_max_degree) pool.push_back(v);
        std::sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        if (static_cast<int>(pool.size()) > opts.pool_cap) pool.resize(opts.pool_cap);

        long tried = 0;
        std::vector<Vertex> seed;
        std::function<bool(int)> run = [&](int size) -> bool {
            if (static_cast<int>(seed.size()) == size) {
                if (tried++ >= opts.seed_budget) return false;
                ++res.attempts;
                std::vector<Vertex> order;
                try {
                    order = complete_seed(g, seed, k);
                } catch (const Error&) {
                    return false;
                }
                return detail::try_candidate(g, k, order, res, "seed");
            }
            for (Vertex v : pool) {
                if (tried > opts.seed_budget) return false;
                if (std::find(seed.begin(), seed.end(), v) != seed.end()) continue;
                seed.push_back(v);
                if (run(size)) return true;
                seed.pop_back();
            }
            return false;
        };
        int max_size = std::min(opts.max_seed_size, k);
        for (int size = 1; size <= max_size && tried <= opts.seed_budget; ++size) {
            seed.clear();
            if (run(size)) return res;
        }
    }

    // Stage 4: exact subset search. A k-subset admits a valid order iff,
    // sorted by outside-degree ascending, the i-th smallest count is <= i-1
    // (tightest slot first); ties in the emitted order break to lower ids.
    {
        double combos = 1;
        for (int i = 0; i < k; ++i) combos *= static_cast<double>(g.n() - i) / (i + 1);
        if (combos <= static_cast<double>(opts.exact_budget)) {
            std::vector<Vertex> sel;
            std::vector<bool> in_sel(g.n(), false);
            std::function<bool(Vertex)> choose = [&](Vertex from) -> bool {
                if (static_cast<int>(sel.size()) == k) {
                    ++res.attempts;
                    std::vector<std::pair<int, Vertex>> ranked;
                    for (Vertex v : sel) {
                        int outside = 0;
                        for (Vertex u : g.neighbors(v))
                            if (!in_sel[u]) ++outside;
                        ranked.push_back({outside, v});
                    }
                    std::sort(ranked.begin(), ranked.end());
                    for (int i = 0; i < k; ++i)
                        if (ranked[i].first > i) return false;
                    std::vector<Vertex> order(k);
                    for (int i = 0; i < k; ++i) order[k - 1 - i] = ranked[i].second;
                    return detail::try_candidate(g, k, order, res, "exact-subset");
                }
                for (Vertex v = from; v < g.n(); ++v) {
                    if (g.n() - v < k - static_cast<int>(sel.size())) break;
                    sel.push_back(v);
                    in_sel[v] = true;
                    if (choose(v + 1)) return true;
                    sel.pop_back();
                    in_sel[v] = false;
                }
                return false;
            };
            if (choose(0)) return res;
        } else {
            res.anomalies.push_back("exact stage skipped: subset space exceeds budget");
        }
    }
    return res;
}

} // namespace planecol
