#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>

#include "cascnet/graph.hpp"
#include "cascnet/loadmodel.hpp"

namespace cascnet {

struct CascadeResult {
    EdgeId attacked;
    std::uint32_t failed_edges;  // overloaded edges, excluding the attacked one
    std::uint32_t rounds;        // synchronous redistribution rounds after the attack
    double dropped_load;         // load lost to empty-neighbour failures
    std::uint32_t removed_isolated_nodes;
};

// Per-round snapshot handed to an observer. `failed` is this round's failing
// set (round 0 is the initial attack), `alive_load` the total load on alive
// edges after the round's redistribution.
struct RoundInfo {
    std::uint32_t round;
    std::span<const EdgeId> failed;
    double dropped;      // load dropped this round
    double alive_load;
    std::uint32_t isolated_removed;
};

struct CascadeOptions {
    // Transfer the edge's frozen initial load instead of its current load on
    // a cascading failure (literal reading of the increment formula).
    bool transfer_initial_load = false;
    std::ostream* trace = nullptr;
    std::function<void(const RoundInfo&)> observer;
};

// Runs the failure loop from one attacked edge to a stable network.
// Synchronous rounds: all overloaded edges in a round fail together; the
// failing set is fixed before any of its load moves, so a same-round peer
// never receives load. Deterministic in (net, base state, attacked).
CascadeResult run_cascade(const Network& net, const EdgeLoadState& base, EdgeId attacked,
                          const CascadeOptions& options = {});

// In-place variant continuing on an evolving state (cumulative attack
// studies). The attacked edge must be alive in `state`.
CascadeResult run_cascade_inplace(const Network& net, EdgeLoadState& state, EdgeId attacked,
                                  const CascadeOptions& options = {});

// Convenience overload building the load state from params.
CascadeResult run_cascade(const Network& net, const ModelParams& params, EdgeId attacked,
                          const CascadeOptions& options = {});

}  // namespace cascnet
