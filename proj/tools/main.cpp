// cascnet: edge-load cascading-failure simulations on synthetic and
// user-supplied networks.
//
//   cascnet generate   build a WS/BA network and write its edge list
//   cascnet cascade    attack one network and report per-attack failures
//   cascnet sweep      gamma over a (strategy, delta, epsilon) grid -> CSV
//   cascnet threshold  epsilon_T table per (strategy, delta) -> CSV

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cascnet/cascade.hpp"
#include "cascnet/error.hpp"
#include "cascnet/experiment.hpp"
#include "cascnet/metrics.hpp"
#include "cascnet/netgen.hpp"
#include "cascnet/rng.hpp"

namespace {

using namespace cascnet;

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct ModelArgs {
    std::string model;  // ws | ba
    NodeId n = 1000;
    std::uint32_t k = 4;
    double p = 0.1;
    NodeId m0 = 2;
    std::uint32_t m = 2;

    Network build(std::uint64_t seed) const {
        if (model == "ws") return generate_ws({n, k, p}, seed);
        if (model == "ba") return generate_ba({m0, m, n}, seed);
        throw InputError("unknown model \"" + model + "\" (expected ws or ba)");
    }
};

void add_model_options(CLI::App& cmd, ModelArgs& args, bool required) {
    auto* model = cmd.add_option("--model", args.model, "topology model: ws or ba");
    if (required) model->required();
    cmd.add_option("--n", args.n, "node count");
    cmd.add_option("--k", args.k, "ws: ring neighbours per node (even)");
    cmd.add_option("--p", args.p, "ws: rewiring probability");
    cmd.add_option("--m0", args.m0, "ba: initial node count");
    cmd.add_option("--m", args.m, "ba: edges per new node");
}

int cmd_generate(const ModelArgs& model, std::uint64_t seed, const std::string& out_path) {
    const Network net = model.build(seed);
    if (out_path == "-") {
        write_edge_list(std::cout, net);
        return 0;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot write \"" + out_path + "\"");
    write_edge_list(out, net);
    if (!out.flush()) throw IoError("write failed for \"" + out_path + "\"");
    return 0;
}

ExperimentConfig load_config(const std::string& path, const std::string& out_override) {
    ExperimentConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open config \"" + path + "\"");
        cfg = ExperimentConfig::from_json(in);
    }
    if (!out_override.empty()) cfg.output = out_override;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-load cascading-failure simulator"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "generate a network edge list");
    ModelArgs gen_model;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    add_model_options(*generate, gen_model, true);
    generate->add_option("--seed", gen_seed, "rng seed");
    generate->add_option("--out", gen_out, "output edge-list path ('-' = stdout)");

    // cascade
    auto* cascade = app.add_subcommand("cascade", "attack a network and report failures");
    ModelArgs cas_model;
    std::string cas_input;
    double cas_delta = 1.0, cas_epsilon = 0.25, cas_theta = 1.0;
    std::optional<EdgeId> cas_edge;
    std::string cas_strategy;
    std::uint32_t cas_ma = 10;
    std::uint64_t cas_seed = 1;
    bool cas_trace = false, cas_initial_transfer = false, cas_cumulative = false;
    add_model_options(*cascade, cas_model, false);
    cascade->add_option("--input", cas_input, "edge-list file (instead of --model)");
    cascade->add_option("--delta", cas_delta, "load parameter");
    cascade->add_option("--epsilon", cas_epsilon, "capacity parameter");
    cascade->add_option("--theta", cas_theta, "capacity exponent");
    cascade->add_option("--attack-edge", cas_edge, "attack one specific edge id");
    cascade->add_option("--strategy", cas_strategy, "attack strategy: hlea or llea");
    cascade->add_option("--ma", cas_ma, "attack set size");
    cascade->add_option("--seed", cas_seed, "rng seed (generation and tie-breaking)");
    cascade->add_flag("--trace", cas_trace, "print one line per cascade round");
    cascade->add_flag("--transfer-initial-load", cas_initial_transfer,
                      "redistribute frozen initial load instead of current load");
    cascade->add_flag("--cumulative", cas_cumulative,
                      "apply the attack set cumulatively on one network");

    // sweep / threshold
    auto* sweep = app.add_subcommand("sweep", "gamma sweep over the parameter grid");
    std::string sweep_config, sweep_out;
    sweep->add_option("--config", sweep_config, "JSON config file");
    sweep->add_option("--out", sweep_out, "output CSV path (overrides config)");

    auto* threshold = app.add_subcommand("threshold", "epsilon_T table per (strategy, delta)");
    std::string thr_config, thr_out;
    threshold->add_option("--config", thr_config, "JSON config file");
    threshold->add_option("--out", thr_out, "output CSV path (overrides config)");

    try {
        app.parse(argc, argv);

        if (generate->parsed()) return cmd_generate(gen_model, gen_seed, gen_out);

        if (cascade->parsed()) {
            Network net = [&] {
                if (!cas_input.empty()) {
                    std::ifstream in(cas_input);
                    if (!in) throw IoError("cannot open edge list \"" + cas_input + "\"");
                    return load_edge_list(in);
                }
                if (cas_model.model.empty())
                    throw InputError("cascade needs --input or --model");
                return cas_model.build(cas_seed);
            }();
            const ModelParams params{cas_delta, cas_epsilon, cas_theta};
            CascadeOptions options;
            options.transfer_initial_load = cas_initial_transfer;
            if (cas_trace) options.trace = &std::cout;

            std::vector<EdgeId> attack_set;
            if (cas_edge) {
                if (!cas_strategy.empty())
                    throw InputError("use either --attack-edge or --strategy, not both");
                attack_set = {*cas_edge};
            } else {
                if (cas_strategy.empty())
                    throw InputError("cascade needs --attack-edge or --strategy");
                const EdgeLoadState state = make_load_state(net, params);
                attack_set = select_attack_set(net, state.initial_load,
                                               attack_strategy_from_string(cas_strategy), cas_ma,
                                               derive_seed(cas_seed, 1));
            }

            const EdgeLoadState base = make_load_state(net, params);
            const GammaResult result = cas_cumulative
                                           ? gamma_cumulative(net, base, attack_set, options)
                                           : gamma(net, base, attack_set, options);
            for (const auto& [edge, failed] : result.per_attack) {
                const auto [u, v] = net.edge(edge);
                std::cout << "attack edge " << edge << " (" << u << '-' << v << "): " << failed
                          << " failed edges\n";
            }
            std::cout << "gamma " << fmt6(result.gamma) << '\n';
            return 0;
        }

        if (sweep->parsed()) {
            ExperimentConfig cfg = load_config(sweep_config, sweep_out);
            const auto records = run_sweep(cfg);
            if (cfg.output.empty()) write_sweep_csv(std::cout, records);
            return 0;
        }

        if (threshold->parsed()) {
            ExperimentConfig cfg = load_config(thr_config, thr_out);
            const ThresholdTable table = run_threshold_table(cfg);
            if (cfg.output.empty()) {
                write_threshold_csv(std::cout, table);
            } else {
                std::ofstream out(cfg.output, std::ios::trunc);
                if (!out) throw IoError("cannot write \"" + cfg.output + "\"");
                write_threshold_csv(out, table);
                if (!out.flush()) throw IoError("write failed for \"" + cfg.output + "\"");
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
