#include "cascnet/cascade.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "cascnet/error.hpp"

namespace cascnet {

namespace {

struct Runner {
    const Network& net;
    EdgeLoadState& state;
    const CascadeOptions& options;

    std::vector<std::uint32_t> alive_degree;
    std::vector<char> node_alive;
    double dropped_total = 0.0;
    std::uint32_t isolated_total = 0;

    Runner(const Network& n, EdgeLoadState& s, const CascadeOptions& opts)
        : net(n), state(s), options(opts) {
        // Alive degrees come from the state, so a continued (cumulative) run
        // picks up where the previous cascade left the network.
        alive_degree.assign(net.node_count(), 0);
        for (EdgeId e = 0; e < state.size(); ++e) {
            if (!state.alive(e)) continue;
            ++alive_degree[net.edge(e).u];
            ++alive_degree[net.edge(e).v];
        }
        node_alive.resize(net.node_count());
        for (NodeId i = 0; i < net.node_count(); ++i) node_alive[i] = alive_degree[i] > 0;
    }

    // Moves one failed edge's load to its alive neighbours; returns the
    // amount dropped (all of it when no neighbour is alive).
    double fail_edge(EdgeId e, EdgeStatus why) {
        const double transferred =
            options.transfer_initial_load ? state.initial_load[e] : state.current_load[e];
        const auto shares = redistribution_shares(net, state, e);
        apply_redistribution(state, e, shares, transferred, why);
        const auto [u, v] = net.edge(e);
        --alive_degree[u];
        --alive_degree[v];
        return shares.empty() ? transferred : 0.0;
    }

    std::uint32_t remove_isolated_nodes() {
        std::uint32_t removed = 0;
        for (NodeId i = 0; i < net.node_count(); ++i) {
            if (node_alive[i] && alive_degree[i] == 0) {
                node_alive[i] = 0;
                ++removed;
            }
        }
        return removed;
    }

    double alive_load() const {
        double total = 0.0;
        for (EdgeId e = 0; e < state.size(); ++e)
            if (state.alive(e)) total += state.current_load[e];
        return total;
    }

    void report(std::uint32_t round, std::span<const EdgeId> failed, double dropped,
                std::uint32_t isolated) {
        if (options.trace) {
            *options.trace << "round " << round << " failed";
            for (EdgeId e : failed) *options.trace << ' ' << e;
            *options.trace << " dropped " << dropped << " isolated " << isolated << '\n';
        }
        if (options.observer)
            options.observer({round, failed, dropped, alive_load(), isolated});
    }
};

}  // namespace

CascadeResult run_cascade_inplace(const Network& net, EdgeLoadState& state, EdgeId attacked,
                                  const CascadeOptions& options) {
    if (attacked >= net.edge_count())
        throw InputError("attacked edge " + std::to_string(attacked) + " out of range");
    if (!state.alive(attacked))
        throw InputError("attacked edge " + std::to_string(attacked) + " is not alive");

    Runner run(net, state, options);

    // Round 0: the external attack.
    {
        const double dropped = run.fail_edge(attacked, EdgeStatus::Attacked);
        run.dropped_total += dropped;
        const std::uint32_t isolated = run.remove_isolated_nodes();
        run.isolated_total += isolated;
        const EdgeId initial[] = {attacked};
        run.report(0, initial, dropped, isolated);
    }

    std::uint32_t failed_edges = 0;
    std::uint32_t rounds = 0;
    std::vector<EdgeId> failing;
    for (;;) {
        // Fix the failing set first: an edge overloading this round cannot
        // receive load from a same-round peer. Strict comparison; equality
        // survives.
        failing.clear();
        for (EdgeId e = 0; e < run.state.size(); ++e)
            if (run.state.alive(e) && run.state.current_load[e] > run.state.capacity[e])
                failing.push_back(e);
        if (failing.empty()) break;

        ++rounds;
        for (EdgeId e : failing) run.state.status[e] = EdgeStatus::Overloaded;

        double dropped = 0.0;
        for (EdgeId e : failing)  // ascending EdgeId, failing is built sorted
            dropped += run.fail_edge(e, EdgeStatus::Overloaded);
        run.dropped_total += dropped;
        failed_edges += static_cast<std::uint32_t>(failing.size());

        const std::uint32_t isolated = run.remove_isolated_nodes();
        run.isolated_total += isolated;
        run.report(rounds, failing, dropped, isolated);
    }

    return {attacked, failed_edges, rounds, run.dropped_total, run.isolated_total};
}

CascadeResult run_cascade(const Network& net, const EdgeLoadState& base, EdgeId attacked,
                          const CascadeOptions& options) {
    EdgeLoadState state = base;
    return run_cascade_inplace(net, state, attacked, options);
}

CascadeResult run_cascade(const Network& net, const ModelParams& params, EdgeId attacked,
                          const CascadeOptions& options) {
    return run_cascade(net, make_load_state(net, params), attacked, options);
}

}  // namespace cascnet
