#pragma once

// Brute-force reference simulator for the cascade tests. Kept deliberately
// naive and independent of the library's load-state machinery: plain arrays,
// fresh pow() evaluations, full re-scans every round.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int degree(int v) const {
        int d = 0;
        for (auto [a, b] : edges)
            if (a == v || b == v) ++d;
        return d;
    }
};

struct Outcome {
    std::vector<bool> failed;  // per edge, includes the attacked edge
    int failed_edges = 0;      // overloaded edges, excluding the attacked one
    int rounds = 0;
    double dropped_load = 0.0;
};

inline Outcome simulate(const Graph& g, double delta, double epsilon, double theta, int attacked) {
    const int m = static_cast<int>(g.edges.size());
    std::vector<double> load(m), cap(m);
    for (int e = 0; e < m; ++e) {
        const double l = std::pow(double(g.degree(g.edges[e].first)) * g.degree(g.edges[e].second),
                                  delta);
        load[e] = l;
        // the linear theta = 1 case is (1 + epsilon) * L exactly
        cap[e] = theta == 1.0 ? (1.0 + epsilon) * l : l + epsilon * std::pow(l, theta);
    }
    std::vector<bool> alive(m, true);

    Outcome out;
    out.failed.assign(m, false);

    auto touches = [&](int e2, int v) {
        return g.edges[e2].first == v || g.edges[e2].second == v;
    };
    auto redistribute = [&](int e) {
        // weight of an alive neighbour edge is (k_i * k_a)^delta, i.e. its
        // own initial load, recomputed here from scratch; neighbours via the
        // first endpoint come before neighbours via the second
        std::vector<int> nbrs;
        for (int endpoint : {g.edges[e].first, g.edges[e].second})
            for (int o = 0; o < m; ++o)
                if (o != e && alive[o] && touches(o, endpoint)) nbrs.push_back(o);
        double total = 0.0;
        std::vector<double> weight;
        for (int o : nbrs) {
            weight.push_back(std::pow(
                double(g.degree(g.edges[o].first)) * g.degree(g.edges[o].second), delta));
            total += weight.back();
        }
        const double moving = load[e];
        load[e] = 0.0;
        if (nbrs.empty()) {
            out.dropped_load += moving;
            return;
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            load[nbrs[i]] += moving * (weight[i] / total);
    };

    alive[attacked] = false;
    out.failed[attacked] = true;
    redistribute(attacked);

    for (;;) {
        std::vector<int> over;
        for (int e = 0; e < m; ++e)
            if (alive[e] && load[e] > cap[e]) over.push_back(e);
        if (over.empty()) break;
        ++out.rounds;
        for (int e : over) {
            alive[e] = false;
            out.failed[e] = true;
        }
        for (int e : over) redistribute(e);
        out.failed_edges += static_cast<int>(over.size());
    }
    return out;
}

}  // namespace oracle
