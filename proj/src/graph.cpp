#include "cascnet/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "cascnet/error.hpp"

namespace cascnet {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Network::Network(NodeId node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)), adj_(node_count) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = edges_[e];
        if (u >= n_ || v >= n_)
            throw InputError("edge " + std::to_string(e) + " references node outside [0, " +
                             std::to_string(n_) + ")");
        if (u == v) throw InputError("self-loop at node " + std::to_string(u));
        if (!seen.insert(pair_key(u, v)).second)
            throw InputError("parallel edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        adj_[u].emplace_back(v, e);
        adj_[v].emplace_back(u, e);
    }
}

void Network::check_node(NodeId i) const {
    if (i >= n_)
        throw InputError("node " + std::to_string(i) + " out of range [0, " + std::to_string(n_) + ")");
}

const Edge& Network::edge(EdgeId e) const {
    if (e >= edges_.size())
        throw InputError("edge " + std::to_string(e) + " out of range [0, " +
                         std::to_string(edges_.size()) + ")");
    return edges_[e];
}

std::span<const std::pair<NodeId, EdgeId>> Network::neighbors(NodeId i) const {
    check_node(i);
    return adj_[i];
}

std::uint32_t Network::degree(NodeId i) const {
    check_node(i);
    return static_cast<std::uint32_t>(adj_[i].size());
}

std::vector<EdgeId> edge_neighbors(const Network& net, EdgeId e) {
    return edge_neighbors(net, e, [](EdgeId) { return true; });
}

Network load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    NodeId max_node = 0;
    bool any = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        char extra;
        if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0)
            throw FormatError("line " + std::to_string(lineno) +
                              ": expected two non-negative integers, got \"" + line + "\"");
        if (u == v)
            throw FormatError("line " + std::to_string(lineno) + ": self-loop \"" + line + "\"");
        if (!seen.insert(pair_key(static_cast<NodeId>(u), static_cast<NodeId>(v))).second)
            throw FormatError("line " + std::to_string(lineno) + ": duplicate edge \"" + line + "\"");
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
        max_node = std::max({max_node, static_cast<NodeId>(u), static_cast<NodeId>(v)});
        any = true;
    }
    const NodeId n = any ? max_node + 1 : 0;
    try {
        return Network(n, std::move(edges));
    } catch (const InputError& err) {
        throw FormatError(err.what());
    }
}

void write_edge_list(std::ostream& out, const Network& net) {
    out << "# nodes " << net.node_count() << " edges " << net.edge_count() << "\n";
    for (const auto& [u, v] : net.edges()) out << u << ' ' << v << '\n';
}

}  // namespace cascnet
