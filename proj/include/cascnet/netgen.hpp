#pragma once

#include <cstdint>

#include "cascnet/graph.hpp"

namespace cascnet {

// Watts-Strogatz small-world parameters: ring of n nodes, each connected to
// k/2 neighbours on each side, edges rewired with probability p.
struct WsParams {
    NodeId n;
    std::uint32_t k;
    double p;
};

// Barabasi-Albert scale-free parameters: complete seed graph on m0 nodes,
// each arriving node attaches to m distinct existing nodes with
// degree-proportional probability, until n nodes.
struct BaParams {
    NodeId m0;
    std::uint32_t m;
    NodeId n;
};

// Deterministic: identical (params, seed) -> identical edge sequence.
// Edge count is exactly n*k/2.
Network generate_ws(const WsParams& params, std::uint64_t seed);

// Edge count is exactly m0*(m0-1)/2 + (n-m0)*m; always connected.
Network generate_ba(const BaParams& params, std::uint64_t seed);

}  // namespace cascnet
