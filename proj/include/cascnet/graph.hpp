#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace cascnet {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
};

// Simple undirected graph with dense node/edge ids. Immutable after
// construction; failures during a cascade are tracked by per-edge status
// flags owned by the cascade, never by mutating the Network, so EdgeIds
// stay stable for reporting.
class Network {
public:
    // Validates simplicity: throws InputError on self-loops or parallel edges.
    Network(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const Edge& edge(EdgeId e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbor node, connecting edge) pairs incident to i.
    std::span<const std::pair<NodeId, EdgeId>> neighbors(NodeId i) const;

    std::uint32_t degree(NodeId i) const;

private:
    void check_node(NodeId i) const;

    NodeId n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<NodeId, EdgeId>>> adj_;
};

// All alive edges != e sharing at least one endpoint with e.
template <class AlivePred>
std::vector<EdgeId> edge_neighbors(const Network& net, EdgeId e, AlivePred&& alive) {
    const Edge& fe = net.edge(e);  // range-checks e
    std::vector<EdgeId> out;
    for (NodeId endpoint : {fe.u, fe.v}) {
        for (const auto& [nbr, ne] : net.neighbors(endpoint)) {
            if (ne != e && alive(ne)) out.push_back(ne);
        }
    }
    return out;
}

std::vector<EdgeId> edge_neighbors(const Network& net, EdgeId e);

// Edge-list text: one "u v" pair per line, '#' comment lines, LF or CRLF.
// Throws FormatError naming the offending line on parse failure, self-loop
// or duplicate edge.
Network load_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Network& net);

}  // namespace cascnet
