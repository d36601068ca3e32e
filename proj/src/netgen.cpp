#include "cascnet/netgen.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "cascnet/error.hpp"
#include "cascnet/rng.hpp"

namespace cascnet {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Network generate_ws(const WsParams& params, std::uint64_t seed) {
    const auto [n, k, p] = params;
    if (k < 2 || k % 2 != 0 || k >= n)
        throw InputError("ws: k must be even, >= 2 and < n (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("ws: p must be in [0, 1]");

    // Ring lattice: node i owns the edges to its k/2 clockwise neighbours.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * k / 2);
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.capacity() * 2);
    for (std::uint32_t off = 1; off <= k / 2; ++off) {
        for (NodeId i = 0; i < n; ++i) {
            const NodeId j = (i + off) % n;
            edges.push_back({i, j});
            present.insert(pair_key(i, j));
        }
    }

    // Rewire each edge with probability p, keeping the owning endpoint fixed
    // and redrawing the other uniformly; redraw on duplicate, bounded retries.
    Rng rng(seed);
    constexpr int kMaxRetries = 128;
    for (auto& edge : edges) {
        if (uniform01(rng) >= params.p) continue;
        present.erase(pair_key(edge.u, edge.v));
        NodeId candidate = edge.v;
        for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
            NodeId w = static_cast<NodeId>(uniform_below(rng, n - 1));
            if (w >= edge.u) ++w;  // skip the fixed endpoint
            if (!present.contains(pair_key(edge.u, w))) {
                candidate = w;
                break;
            }
        }
        // retries exhausted -> edge left as it was (candidate == edge.v)
        edge.v = candidate;
        present.insert(pair_key(edge.u, edge.v));
    }
    return Network(n, std::move(edges));
}

Network generate_ba(const BaParams& params, std::uint64_t seed) {
    const auto [m0, m, n] = params;
    if (m < 1 || m > m0 || m0 > n)
        throw InputError("ba: need 1 <= m <= m0 <= n (m0=" + std::to_string(m0) +
                         ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m0) * (m0 - 1) / 2 +
                  static_cast<std::size_t>(n - m0) * m);

    // Seed clique: makes degree-proportional sampling well defined from the
    // first arrival. stubs holds each node once per unit of degree, so a
    // uniform pick from it is a degree-proportional pick.
    std::vector<NodeId> stubs;
    for (NodeId u = 0; u < m0; ++u) {
        for (NodeId v = u + 1; v < m0; ++v) {
            edges.push_back({u, v});
            stubs.push_back(u);
            stubs.push_back(v);
        }
    }

    Rng rng(seed);
    std::vector<NodeId> targets;
    for (NodeId newcomer = m0; newcomer < n; ++newcomer) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId t = stubs[uniform_below(rng, stubs.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.push_back({newcomer, t});
            stubs.push_back(newcomer);
            stubs.push_back(t);
        }
    }
    return Network(n, std::move(edges));
}

}  // namespace cascnet
