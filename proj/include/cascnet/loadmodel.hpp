#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cascnet/graph.hpp"

namespace cascnet {

// Load/capacity parameters. An edge carries initial load (k_i*k_j)^delta and
// capacity load + epsilon*load^theta. epsilon = 0 is accepted for boundary
// experiments.
struct ModelParams {
    double delta;
    double epsilon;
    double theta = 1.0;

    void validate() const;  // throws InputError
};

enum class EdgeStatus : std::uint8_t { Alive, Attacked, Overloaded };

// Per-edge load state for one cascade execution. Degrees entering the load
// formulas are frozen at t=0 (they come from the immutable Network), so
// initial_load never changes after construction.
struct EdgeLoadState {
    std::vector<double> initial_load;
    std::vector<double> current_load;
    std::vector<double> capacity;
    std::vector<EdgeStatus> status;

    bool alive(EdgeId e) const { return status[e] == EdgeStatus::Alive; }
    std::size_t size() const { return status.size(); }
};

// (k_i * k_j)^delta with degrees from the intact network.
double initial_load(const Network& net, EdgeId e, double delta);

// load + epsilon * load^theta; exactly (1+epsilon)*load when theta == 1.
double capacity(double load, double epsilon, double theta);

EdgeLoadState make_load_state(const Network& net, const ModelParams& params);

// Redistribution shares of a failed edge over its currently-alive neighbour
// edges: share(e_ia) = (k_i*k_a)^delta / D with D summed over alive
// neighbours on both sides, degrees frozen at t=0. The weights are exactly
// the frozen initial loads already held by `state`, so delta enters through
// them. Empty when no alive neighbour exists (the load is dropped);
// non-empty shares sum to 1.
std::vector<std::pair<EdgeId, double>> redistribution_shares(const Network& net,
                                                             const EdgeLoadState& state,
                                                             EdgeId failed);

// Adds transferred*share(e) to each share target, zeroes the failed edge's
// load and stamps its status. Targets must be Alive.
void apply_redistribution(EdgeLoadState& state, EdgeId failed,
                          std::span<const std::pair<EdgeId, double>> shares, double transferred,
                          EdgeStatus failed_status);

}  // namespace cascnet
