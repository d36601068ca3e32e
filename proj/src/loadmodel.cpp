#include "cascnet/loadmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cascnet/error.hpp"

namespace cascnet {

void ModelParams::validate() const {
    if (!(delta > 0.0)) throw InputError("delta must be > 0");
    if (!(epsilon >= 0.0)) throw InputError("epsilon must be >= 0");
    if (!(theta > 0.0)) throw InputError("theta must be > 0");
}

double initial_load(const Network& net, EdgeId e, double delta) {
    const auto [u, v] = net.edge(e);
    const double ku = net.degree(u);
    const double kv = net.degree(v);
    if (ku == 0.0 || kv == 0.0)
        throw std::logic_error("edge " + std::to_string(e) + " has a degree-0 endpoint");
    return std::pow(ku * kv, delta);
}

double capacity(double load, double epsilon, double theta) {
    if (theta == 1.0) return (1.0 + epsilon) * load;
    return load + epsilon * std::pow(load, theta);
}

EdgeLoadState make_load_state(const Network& net, const ModelParams& params) {
    params.validate();
    const EdgeId m = net.edge_count();
    EdgeLoadState state;
    state.initial_load.resize(m);
    state.current_load.resize(m);
    state.capacity.resize(m);
    state.status.assign(m, EdgeStatus::Alive);
    for (EdgeId e = 0; e < m; ++e) {
        const double load = initial_load(net, e, params.delta);
        state.initial_load[e] = load;
        state.current_load[e] = load;
        state.capacity[e] = capacity(load, params.epsilon, params.theta);
    }
    return state;
}

std::vector<std::pair<EdgeId, double>> redistribution_shares(const Network& net,
                                                             const EdgeLoadState& state,
                                                             EdgeId failed) {
    // The weight of neighbour edge e_ia is (k_i*k_a)^delta, which is exactly
    // its frozen initial load, so the denominator renormalizes over the
    // alive neighbours only.
    std::vector<std::pair<EdgeId, double>> shares;
    double total = 0.0;
    const Edge& fe = net.edge(failed);
    for (NodeId endpoint : {fe.u, fe.v}) {
        for (const auto& [nbr, e] : net.neighbors(endpoint)) {
            if (e == failed || !state.alive(e)) continue;
            shares.emplace_back(e, state.initial_load[e]);
            total += state.initial_load[e];
        }
    }
    for (auto& [e, w] : shares) w /= total;
    return shares;
}

void apply_redistribution(EdgeLoadState& state, EdgeId failed,
                          std::span<const std::pair<EdgeId, double>> shares, double transferred,
                          EdgeStatus failed_status) {
    for (const auto& [e, share] : shares) {
        if (!state.alive(e))
            throw std::logic_error("redistribution target " + std::to_string(e) + " is not alive");
        state.current_load[e] += transferred * share;
    }
    state.current_load[failed] = 0.0;
    state.status[failed] = failed_status;
}

}  // namespace cascnet
