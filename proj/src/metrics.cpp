#include "cascnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>

#include "cascnet/error.hpp"
#include "cascnet/parallel.hpp"
#include "cascnet/rng.hpp"

namespace cascnet {

GammaResult gamma(const Network& net, const EdgeLoadState& base,
                  std::span<const EdgeId> attack_set, const CascadeOptions& options) {
    const EdgeId m = net.edge_count();
    if (m < 2) throw InputError("gamma needs a network with at least 2 edges");
    if (attack_set.empty()) throw InputError("gamma needs a non-empty attack set");

    GammaResult result;
    result.per_attack.reserve(attack_set.size());
    std::uint64_t total_failed = 0;
    for (EdgeId attacked : attack_set) {
        const CascadeResult r = run_cascade(net, base, attacked, options);
        result.per_attack.emplace_back(attacked, r.failed_edges);
        total_failed += r.failed_edges;
    }
    result.gamma = static_cast<double>(total_failed) /
                   (static_cast<double>(attack_set.size()) * (m - 1));
    return result;
}

GammaResult gamma_cumulative(const Network& net, const EdgeLoadState& base,
                             std::span<const EdgeId> attack_set,
                             const CascadeOptions& options) {
    const EdgeId m = net.edge_count();
    if (m < 2) throw InputError("gamma needs a network with at least 2 edges");
    if (attack_set.empty()) throw InputError("gamma needs a non-empty attack set");

    GammaResult result;
    result.per_attack.reserve(attack_set.size());
    EdgeLoadState state = base;
    std::uint64_t total_failed = 0;
    for (EdgeId attacked : attack_set) {
        std::uint32_t failed = 0;
        if (state.alive(attacked)) {
            failed = run_cascade_inplace(net, state, attacked, options).failed_edges;
            total_failed += failed;
        }
        result.per_attack.emplace_back(attacked, failed);
    }
    result.gamma = static_cast<double>(total_failed) /
                   (static_cast<double>(attack_set.size()) * (m - 1));
    return result;
}

GammaResult gamma(const Network& net, const ModelParams& params,
                  std::span<const EdgeId> attack_set, const CascadeOptions& options) {
    return gamma(net, make_load_state(net, params), attack_set, options);
}

std::vector<double> default_epsilon_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 160; ++i) grid.push_back(i * 0.005);
    return grid;
}

namespace {

// One repetition's reusable pieces: network, frozen loads, attack set.
struct Repetition {
    Network net;
    std::vector<double> loads;
    std::vector<EdgeId> attack_set;
};

Repetition make_repetition(const ThresholdQuery& q, std::uint32_t rep) {
    const std::uint64_t net_seed = derive_seed(q.master_seed, rep, 0);
    const std::uint64_t tie_seed = derive_seed(q.master_seed, rep, 1);
    Network net = q.make_network(net_seed);
    std::vector<double> loads(net.edge_count());
    for (EdgeId e = 0; e < net.edge_count(); ++e) loads[e] = initial_load(net, e, q.delta);
    auto attack = select_attack_set(net, loads, q.strategy, q.m_a, tie_seed);
    return {std::move(net), std::move(loads), std::move(attack)};
}

double mean_gamma_at(const std::vector<Repetition>& reps, const ThresholdQuery& q,
                     double epsilon) {
    std::vector<double> gammas(reps.size());
    parallel_for(reps.size(), q.workers, [&](std::size_t i) {
        const Repetition& rep = reps[i];
        EdgeLoadState state;
        state.initial_load = rep.loads;
        state.current_load = rep.loads;
        state.capacity.resize(rep.loads.size());
        for (std::size_t e = 0; e < rep.loads.size(); ++e)
            state.capacity[e] = capacity(rep.loads[e], epsilon, q.theta);
        state.status.assign(rep.loads.size(), EdgeStatus::Alive);
        CascadeOptions options;
        options.transfer_initial_load = q.transfer_initial_load;
        gammas[i] = q.cumulative_attacks
                        ? gamma_cumulative(rep.net, state, rep.attack_set, options).gamma
                        : gamma(rep.net, state, rep.attack_set, options).gamma;
    });
    // Mean zero must hold exactly per repetition; summing zeros keeps that.
    double sum = 0.0;
    for (double g : gammas) sum += g;
    return sum / static_cast<double>(reps.size());
}

}  // namespace

ThresholdResult find_epsilon_threshold(const ThresholdQuery& query) {
    if (query.epsilon_grid.empty()) throw InputError("epsilon grid is empty");
    if (!std::is_sorted(query.epsilon_grid.begin(), query.epsilon_grid.end()))
        throw InputError("epsilon grid must be ascending");
    if (query.repetitions < 1) throw InputError("repetitions must be >= 1");
    if (!query.make_network) throw InputError("no network factory configured");

    std::vector<Repetition> reps;
    reps.reserve(query.repetitions);
    for (std::uint32_t r = 0; r < query.repetitions; ++r)
        reps.push_back(make_repetition(query, r));

    const auto& grid = query.epsilon_grid;
    ThresholdResult result;
    result.grid_step = grid.size() > 1 ? grid[1] - grid[0] : 0.0;

    std::optional<double> lowest_all_zero;
    if (query.full_scan) {
        result.gamma_curve.reserve(grid.size());
        for (double eps : grid) result.gamma_curve.emplace_back(eps, mean_gamma_at(reps, query, eps));
        // Smallest epsilon with zero mean and all larger means zero too.
        for (auto it = result.gamma_curve.rbegin(); it != result.gamma_curve.rend(); ++it) {
            if (it->second != 0.0) break;
            lowest_all_zero = it->first;
        }
    } else {
        // Descend from the top of the grid; stop at the first non-zero mean.
        for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
            const double mean = mean_gamma_at(reps, query, *it);
            result.gamma_curve.emplace_back(*it, mean);
            if (mean != 0.0) break;
            lowest_all_zero = *it;
        }
        std::reverse(result.gamma_curve.begin(), result.gamma_curve.end());
    }

    if (lowest_all_zero) {
        result.found = true;
        result.epsilon_t = *lowest_all_zero;
    }
    return result;
}

}  // namespace cascnet
