#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cascnet/attack.hpp"
#include "cascnet/graph.hpp"
#include "cascnet/metrics.hpp"
#include "cascnet/netgen.hpp"

namespace cascnet {

struct TopologySpec {
    enum class Kind { Ws, Ba, File } kind = Kind::Ba;
    WsParams ws{1000, 4, 0.1};
    BaParams ba{2, 2, 1000};
    std::string path;  // Kind::File

    std::string label() const;         // "ws", "ba" or "file:<name>"
    Network build(std::uint64_t seed) const;
    // Loads and caches the file network so build() stays cheap and
    // thread-safe during a sweep. No-op for generated topologies.
    void prepare();

private:
    std::shared_ptr<const Network> file_net_;
};

// One experiment configuration. The defaults reproduce the reference
// setup: N=1000, M_A=10, WS K=4 p=0.1, BA m0=m=2, theta=1,
// delta in {0.2,...,2.0}, epsilon in {0,...,0.8} step 0.005, 30 repetitions.
struct ExperimentConfig {
    TopologySpec topology;
    std::vector<AttackStrategy> strategies{AttackStrategy::Hlea, AttackStrategy::Llea};
    std::vector<double> delta_grid;    // default 0.2..2.0 step 0.2
    std::vector<double> epsilon_grid;  // default 0..0.8 step 0.005
    double theta = 1.0;
    std::uint32_t m_a = 10;
    std::uint32_t repetitions = 30;
    std::uint64_t master_seed = 20220913;
    std::string output;
    unsigned workers = 0;
    bool transfer_initial_load = false;
    bool cumulative_attacks = false;
    bool threshold_full_scan = false;

    ExperimentConfig();
    // Flat key-value JSON; every key optional. Throws FormatError/InputError.
    static ExperimentConfig from_json(std::istream& in);
    void validate() const;

    // Seed shared by every epsilon of one (strategy, delta) cell.
    std::uint64_t cell_seed(std::size_t strategy_idx, std::size_t delta_idx) const;
};

struct SweepRecord {
    std::string topology;
    std::string strategy;
    double delta;
    double epsilon;
    double gamma_mean;
    double gamma_std;
    std::uint32_t repetitions;
    std::uint64_t seed;
};

// Runs every (strategy, delta, epsilon) cell, averaging gamma over
// `repetitions` networks. Networks are shared across the epsilon grid of a
// cell. When `output` names an existing CSV from the same config, completed
// cells are reused instead of recomputed; the merged, sorted table is
// rewritten. Returns all records sorted by (strategy, delta, epsilon).
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

struct ThresholdTable {
    std::string topology;
    std::vector<std::string> strategies;
    std::vector<double> deltas;
    // epsilon_t[delta_idx][strategy_idx]; nullopt = not found in grid range.
    std::vector<std::vector<std::optional<double>>> epsilon_t;
};

// epsilon_T per (strategy, delta): the cheapest capacity headroom at which
// no attack causes any cascading failure across all repetitions.
ThresholdTable run_threshold_table(const ExperimentConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);
void write_threshold_csv(std::ostream& out, const ThresholdTable& table);

}  // namespace cascnet
