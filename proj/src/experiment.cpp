#include "cascnet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cascnet/error.hpp"
#include "cascnet/parallel.hpp"
#include "cascnet/rng.hpp"

namespace cascnet {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-9; }

}  // namespace

std::string TopologySpec::label() const {
    switch (kind) {
        case Kind::Ws: return "ws";
        case Kind::Ba: return "ba";
        case Kind::File: return "file:" + std::filesystem::path(path).filename().string();
    }
    return "?";
}

Network TopologySpec::build(std::uint64_t seed) const {
    switch (kind) {
        case Kind::Ws: return generate_ws(ws, seed);
        case Kind::Ba: return generate_ba(ba, seed);
        case Kind::File: break;
    }
    if (file_net_) return *file_net_;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list \"" + path + "\"");
    return load_edge_list(in);
}

void TopologySpec::prepare() {
    if (kind != Kind::File || file_net_) return;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list \"" + path + "\"");
    file_net_ = std::make_shared<const Network>(load_edge_list(in));
}

ExperimentConfig::ExperimentConfig() {
    for (int i = 1; i <= 10; ++i) delta_grid.push_back(i * 0.2);
    epsilon_grid = default_epsilon_grid();
}

ExperimentConfig ExperimentConfig::from_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw FormatError(std::string("config: ") + err.what());
    }
    if (!doc.is_object()) throw FormatError("config: expected a JSON object");

    ExperimentConfig cfg;
    std::optional<double> eps_min, eps_max, eps_step;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "topology") {
                const std::string t = value.get<std::string>();
                if (t == "ws") cfg.topology.kind = TopologySpec::Kind::Ws;
                else if (t == "ba") cfg.topology.kind = TopologySpec::Kind::Ba;
                else if (t == "file") cfg.topology.kind = TopologySpec::Kind::File;
                else throw FormatError("config: topology must be ws, ba or file");
            } else if (key == "path") cfg.topology.path = value.get<std::string>();
            else if (key == "n") {
                cfg.topology.ws.n = value.get<NodeId>();
                cfg.topology.ba.n = value.get<NodeId>();
            } else if (key == "ws_k") cfg.topology.ws.k = value.get<std::uint32_t>();
            else if (key == "ws_p") cfg.topology.ws.p = value.get<double>();
            else if (key == "ba_m0") cfg.topology.ba.m0 = value.get<NodeId>();
            else if (key == "ba_m") cfg.topology.ba.m = value.get<std::uint32_t>();
            else if (key == "strategies") {
                cfg.strategies.clear();
                for (const auto& s : value)
                    cfg.strategies.push_back(attack_strategy_from_string(s.get<std::string>()));
            } else if (key == "delta_grid") cfg.delta_grid = value.get<std::vector<double>>();
            else if (key == "epsilon_grid") cfg.epsilon_grid = value.get<std::vector<double>>();
            else if (key == "epsilon_min") eps_min = value.get<double>();
            else if (key == "epsilon_max") eps_max = value.get<double>();
            else if (key == "epsilon_step") eps_step = value.get<double>();
            else if (key == "theta") cfg.theta = value.get<double>();
            else if (key == "ma") cfg.m_a = value.get<std::uint32_t>();
            else if (key == "repetitions") cfg.repetitions = value.get<std::uint32_t>();
            else if (key == "master_seed") cfg.master_seed = value.get<std::uint64_t>();
            else if (key == "output") cfg.output = value.get<std::string>();
            else if (key == "workers") cfg.workers = value.get<unsigned>();
            else if (key == "transfer_initial_load") cfg.transfer_initial_load = value.get<bool>();
            else if (key == "cumulative_attacks") cfg.cumulative_attacks = value.get<bool>();
            else if (key == "threshold_full_scan") cfg.threshold_full_scan = value.get<bool>();
            else throw FormatError("config: unknown key \"" + key + "\"");
        } catch (const nlohmann::json::exception& err) {
            throw FormatError("config: bad value for \"" + key + "\": " + err.what());
        }
    }
    if (eps_min || eps_max || eps_step) {
        const double lo = eps_min.value_or(0.0);
        const double hi = eps_max.value_or(0.8);
        const double step = eps_step.value_or(0.005);
        if (!(step > 0.0) || hi < lo) throw FormatError("config: bad epsilon range");
        cfg.epsilon_grid.clear();
        for (int i = 0;; ++i) {
            const double e = lo + i * step;
            if (e > hi + 1e-12) break;
            cfg.epsilon_grid.push_back(e);
        }
    }
    cfg.validate();
    return cfg;
}

void ExperimentConfig::validate() const {
    if (strategies.empty()) throw InputError("config: no attack strategies");
    if (delta_grid.empty()) throw InputError("config: empty delta grid");
    if (epsilon_grid.empty()) throw InputError("config: empty epsilon grid");
    if (!std::is_sorted(epsilon_grid.begin(), epsilon_grid.end()))
        throw InputError("config: epsilon grid must be ascending");
    if (repetitions < 1) throw InputError("config: repetitions must be >= 1");
    if (m_a < 1) throw InputError("config: ma must be >= 1");
    for (double d : delta_grid)
        if (!(d > 0.0)) throw InputError("config: delta values must be > 0");
    if (topology.kind == TopologySpec::Kind::File && topology.path.empty())
        throw InputError("config: file topology needs a path");
}

std::uint64_t ExperimentConfig::cell_seed(std::size_t strategy_idx, std::size_t delta_idx) const {
    return derive_seed(master_seed, fnv1a(topology.label().c_str()), strategy_idx, delta_idx);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "topology,strategy,delta,epsilon,gamma_mean,gamma_std,repetitions,seed\n";
    for (const auto& r : records) {
        out << r.topology << ',' << r.strategy << ',' << fmt6(r.delta) << ',' << fmt6(r.epsilon)
            << ',' << fmt6(r.gamma_mean) << ',' << fmt6(r.gamma_std) << ',' << r.repetitions << ','
            << r.seed << '\n';
    }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
    std::vector<SweepRecord> records;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        SweepRecord r;
        std::string field;
        auto next = [&]() {
            if (!std::getline(ls, field, ',')) throw FormatError("sweep csv: short row \"" + line + "\"");
            return field;
        };
        r.topology = next();
        r.strategy = next();
        try {
            r.delta = std::stod(next());
            r.epsilon = std::stod(next());
            r.gamma_mean = std::stod(next());
            r.gamma_std = std::stod(next());
            r.repetitions = static_cast<std::uint32_t>(std::stoul(next()));
            r.seed = std::stoull(next());
        } catch (const std::exception&) {
            throw FormatError("sweep csv: bad row \"" + line + "\"");
        }
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

void sort_records(std::vector<SweepRecord>& records) {
    std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.topology, a.strategy, a.delta, a.epsilon) <
               std::tie(b.topology, b.strategy, b.delta, b.epsilon);
    });
}

void persist(const std::string& path, std::vector<SweepRecord>& records) {
    if (path.empty()) return;
    sort_records(records);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot write \"" + tmp + "\"");
        write_sweep_csv(out, records);
        if (!out.flush()) throw IoError("write failed for \"" + tmp + "\"");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot replace \"" + path + "\": " + ec.message());
}

// One repetition's reusable pieces within a (strategy, delta) cell.
struct CellRep {
    Network net;
    std::vector<double> loads;
    std::vector<EdgeId> attack_set;
};

std::vector<CellRep> build_cell_reps(const TopologySpec& topo, AttackStrategy strategy,
                                     double delta, std::uint32_t m_a, std::uint32_t repetitions,
                                     std::uint64_t cell_seed) {
    std::vector<CellRep> reps;
    reps.reserve(repetitions);
    for (std::uint32_t r = 0; r < repetitions; ++r) {
        Network net = topo.build(derive_seed(cell_seed, r, 0));
        std::vector<double> loads(net.edge_count());
        for (EdgeId e = 0; e < net.edge_count(); ++e) loads[e] = initial_load(net, e, delta);
        auto attack = select_attack_set(net, loads, strategy, m_a, derive_seed(cell_seed, r, 1));
        reps.push_back({std::move(net), std::move(loads), std::move(attack)});
    }
    return reps;
}

double rep_gamma(const CellRep& rep, double epsilon, double theta,
                 const ExperimentConfig& cfg) {
    EdgeLoadState state;
    state.initial_load = rep.loads;
    state.current_load = rep.loads;
    state.capacity.resize(rep.loads.size());
    for (std::size_t e = 0; e < rep.loads.size(); ++e)
        state.capacity[e] = capacity(rep.loads[e], epsilon, theta);
    state.status.assign(rep.loads.size(), EdgeStatus::Alive);
    CascadeOptions options;
    options.transfer_initial_load = cfg.transfer_initial_load;
    return cfg.cumulative_attacks ? gamma_cumulative(rep.net, state, rep.attack_set, options).gamma
                                  : gamma(rep.net, state, rep.attack_set, options).gamma;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
    config.validate();
    ExperimentConfig cfg = config;
    cfg.topology.prepare();
    const std::string topo_label = cfg.topology.label();

    // Resume: keep rows already present for this topology and repetition count.
    std::vector<SweepRecord> records;
    if (!cfg.output.empty() && std::filesystem::exists(cfg.output)) {
        std::ifstream in(cfg.output);
        if (!in) throw IoError("cannot read \"" + cfg.output + "\"");
        for (auto& r : read_sweep_csv(in))
            if (r.topology == topo_label && r.repetitions == cfg.repetitions)
                records.push_back(std::move(r));
    }
    auto have_cell = [&](const std::string& strategy, double delta, double epsilon) {
        return std::any_of(records.begin(), records.end(), [&](const SweepRecord& r) {
            return r.strategy == strategy && near(r.delta, delta) && near(r.epsilon, epsilon);
        });
    };

    const std::size_t total_cells = cfg.strategies.size() * cfg.delta_grid.size();
    std::size_t done_cells = 0;
    for (std::size_t s = 0; s < cfg.strategies.size(); ++s) {
        const std::string strategy_name = to_string(cfg.strategies[s]);
        for (std::size_t d = 0; d < cfg.delta_grid.size(); ++d) {
            const double delta = cfg.delta_grid[d];
            std::vector<std::size_t> missing;
            for (std::size_t e = 0; e < cfg.epsilon_grid.size(); ++e)
                if (!have_cell(strategy_name, delta, cfg.epsilon_grid[e])) missing.push_back(e);
            ++done_cells;
            if (missing.empty()) continue;

            const std::uint64_t seed = cfg.cell_seed(s, d);
            const auto reps = build_cell_reps(cfg.topology, cfg.strategies[s], delta, cfg.m_a,
                                              cfg.repetitions, seed);

            std::vector<SweepRecord> fresh(missing.size());
            parallel_for(missing.size(), cfg.workers, [&](std::size_t i) {
                const double epsilon = cfg.epsilon_grid[missing[i]];
                double sum = 0.0, sumsq = 0.0;
                for (const auto& rep : reps) {
                    const double g = rep_gamma(rep, epsilon, cfg.theta, cfg);
                    sum += g;
                    sumsq += g * g;
                }
                const double n = static_cast<double>(reps.size());
                const double mean = sum / n;
                const double var = reps.size() > 1
                                       ? std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0))
                                       : 0.0;
                fresh[i] = {topo_label, strategy_name, delta,    epsilon,
                            mean,       std::sqrt(var), cfg.repetitions, seed};
            });
            records.insert(records.end(), fresh.begin(), fresh.end());
            persist(cfg.output, records);
            std::cerr << "sweep " << topo_label << ' ' << strategy_name << " delta=" << fmt6(delta)
                      << " done (" << done_cells << '/' << total_cells << ")\n";
        }
    }
    sort_records(records);
    persist(cfg.output, records);
    return records;
}

ThresholdTable run_threshold_table(const ExperimentConfig& config) {
    config.validate();
    ExperimentConfig cfg = config;
    cfg.topology.prepare();

    ThresholdTable table;
    table.topology = cfg.topology.label();
    for (auto s : cfg.strategies) table.strategies.push_back(to_string(s));
    table.deltas = cfg.delta_grid;
    table.epsilon_t.assign(cfg.delta_grid.size(),
                           std::vector<std::optional<double>>(cfg.strategies.size()));

    for (std::size_t d = 0; d < cfg.delta_grid.size(); ++d) {
        for (std::size_t s = 0; s < cfg.strategies.size(); ++s) {
            ThresholdQuery query;
            const TopologySpec topo = cfg.topology;
            query.make_network = [topo](std::uint64_t seed) { return topo.build(seed); };
            query.delta = cfg.delta_grid[d];
            query.theta = cfg.theta;
            query.strategy = cfg.strategies[s];
            query.m_a = cfg.m_a;
            query.repetitions = cfg.repetitions;
            query.epsilon_grid = cfg.epsilon_grid;
            query.master_seed = cfg.cell_seed(s, d);
            query.full_scan = cfg.threshold_full_scan;
            query.transfer_initial_load = cfg.transfer_initial_load;
            query.cumulative_attacks = cfg.cumulative_attacks;
            query.workers = cfg.workers;
            const ThresholdResult r = find_epsilon_threshold(query);
            if (r.found) table.epsilon_t[d][s] = r.epsilon_t;
            std::cerr << "threshold " << table.topology << ' ' << table.strategies[s]
                      << " delta=" << fmt6(query.delta) << " -> "
                      << (r.found ? fmt6(r.epsilon_t) : std::string("NA")) << '\n';
        }
    }
    return table;
}

void write_threshold_csv(std::ostream& out, const ThresholdTable& table) {
    out << "# epsilon_T for topology " << table.topology << "\n";
    out << "delta";
    for (const auto& s : table.strategies) out << ",epsilon_t_" << s;
    out << '\n';
    for (std::size_t d = 0; d < table.deltas.size(); ++d) {
        out << fmt6(table.deltas[d]);
        for (std::size_t s = 0; s < table.strategies.size(); ++s) {
            out << ',';
            if (table.epsilon_t[d][s]) out << fmt6(*table.epsilon_t[d][s]);
            else out << "NA";
        }
        out << '\n';
    }
}

}  // namespace cascnet
