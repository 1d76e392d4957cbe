#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "planecol/plane_graph.hpp"

namespace planecol {

// Smallest-last removal order: repeatedly delete a minimum-degree vertex of
// what remains (ties: lowest id). back_degree[i] is order[i]'s degree at
// removal time; the degeneracy is the maximum back degree, and every vertex
// has at most that many neighbors occurring after it in `order`.
struct DegeneracyCertificate {
    std::vector<Vertex> order;
    std::vector<int> back_degree;
    int degeneracy = 0;
};

inline DegeneracyCertificate degeneracy_ordering(const PlaneGraph& g) {
    DegeneracyCertificate c;
    const int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::set<std::pair<int, Vertex>> by_degree;  // (current degree, id)
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        by_degree.insert({deg[v], v});
    }
    while (!by_degree.empty()) {
        auto [d, v] = *by_degree.begin();
        by_degree.erase(by_degree.begin());
        removed[v] = true;
        c.order.push_back(v);
        c.back_degree.push_back(d);
        c.degeneracy = std::max(c.degeneracy, d);
        for (Vertex u : g.neighbors(v)) {
            if (removed[u]) continue;
            by_degree.erase({deg[u], u});
            --deg[u];
            by_degree.insert({deg[u], u});
        }
    }
    return c;
}

// Checks the 4-degeneracy consequence of the class definition (no chordal
// 4-cycles already suffices). The check itself never throws: a failing graph
// yields ok == false. precondition_checked records whether the caller
// actually verified class membership / absence of chordal 4-cycles; when it
// did not, the result carries a warning rather than silently claiming the
// consequence applies.
struct FourDegenerateCheck {
    bool ok = false;
    int degeneracy = 0;
    bool precondition_not_checked = false;
    DegeneracyCertificate certificate;
};

inline FourDegenerateCheck assert_4_degenerate(const PlaneGraph& g,
                                               bool precondition_checked = false) {
    FourDegenerateCheck r;
    r.certificate = degeneracy_ordering(g);
    r.degeneracy = r.certificate.degeneracy;
    r.ok = r.degeneracy <= 4;
    r.precondition_not_checked = !precondition_checked;
    return r;
}

} // namespace planecol
