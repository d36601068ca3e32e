#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cascnet/attack.hpp"
#include "cascnet/cascade.hpp"
#include "cascnet/graph.hpp"
#include "cascnet/loadmodel.hpp"

namespace cascnet {

struct GammaResult {
    double gamma;  // sum of per-attack failure counts / (m_a * (M - 1))
    std::vector<std::pair<EdgeId, std::uint32_t>> per_attack;
};

// Robustness index: each edge of `attack_set` is attacked independently on
// the intact network; the attacked edge itself is not counted as a victim.
GammaResult gamma(const Network& net, const ModelParams& params,
                  std::span<const EdgeId> attack_set, const CascadeOptions& options = {});

// Same, with a precomputed load state (avoids re-deriving loads per attack).
GammaResult gamma(const Network& net, const EdgeLoadState& base,
                  std::span<const EdgeId> attack_set, const CascadeOptions& options = {});

// Study variant: attacks land in sequence on one evolving network instead of
// independent intact copies. An attack target already dead from an earlier
// cascade contributes 0 failures.
GammaResult gamma_cumulative(const Network& net, const EdgeLoadState& base,
                             std::span<const EdgeId> attack_set,
                             const CascadeOptions& options = {});

struct ThresholdResult {
    bool found = false;
    double epsilon_t = 0.0;
    double grid_step = 0.0;
    // (epsilon, mean gamma) for every scanned grid point, ascending epsilon.
    std::vector<std::pair<double, double>> gamma_curve;
};

struct ThresholdQuery {
    // Builds the repetition's network from a derived seed. A fixed topology
    // ignores the seed.
    std::function<Network(std::uint64_t)> make_network;
    double delta = 1.0;
    double theta = 1.0;
    AttackStrategy strategy = AttackStrategy::Hlea;
    std::uint32_t m_a = 10;
    std::uint32_t repetitions = 30;
    std::vector<double> epsilon_grid;  // ascending
    std::uint64_t master_seed = 0;
    // Scan every grid point (full gamma curve) instead of descending from
    // the top of the grid and stopping at the first non-zero mean.
    bool full_scan = false;
    bool transfer_initial_load = false;
    bool cumulative_attacks = false;
    unsigned workers = 0;  // 0 = auto
};

// Locates the smallest grid epsilon whose mean gamma over all repetitions is
// exactly 0 with every larger scanned epsilon also 0. Mean-zero requires
// every repetition's gamma to be exactly 0. Networks and attack sets are
// shared across the epsilon grid (one per repetition).
ThresholdResult find_epsilon_threshold(const ThresholdQuery& query);

// Default grid used by the experiments: 0.000 .. 0.800 in steps of 0.005.
std::vector<double> default_epsilon_grid();

}  // namespace cascnet
