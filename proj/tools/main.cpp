#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "miuz/attack.hpp"
#include "miuz/graph.hpp"
#include "miuz/harness.hpp"
#include "miuz/io.hpp"
#include "miuz/metrics.hpp"
#include "miuz/netgen.hpp"

namespace {

using namespace miuz;

void cmd_generate(const GenSpec& spec, const std::string& out_path) {
    spec.validate();
    const Graph g = generate(spec);
    write_edge_list_file(out_path, g);
    const double mean_degree =
        g.node_count() > 0 ? 2.0 * static_cast<double>(g.edge_count()) / g.node_count() : 0.0;
    std::cout << "nodes " << g.node_count() << "\n"
              << "edges " << g.edge_count() << "\n"
              << "mean_degree " << format_real(mean_degree) << "\n";
}

void cmd_metrics(const std::string& graph_path, const std::string& metric,
                 const std::string& out_path) {
    const Graph g = read_edge_list_file(graph_path);
    std::vector<MetricVector> columns;
    if (metric == "all") {
        columns.push_back(miuz_all(g));
        columns.push_back(degree_all(g));
        columns.push_back(betweenness_all(g));
        columns.push_back(harmonic_all(g));
    } else {
        switch (parse_metric_kind(metric)) {
        case MetricKind::Miuz: columns.push_back(miuz_all(g)); break;
        case MetricKind::Degree: columns.push_back(degree_all(g)); break;
        case MetricKind::Betweenness: columns.push_back(betweenness_all(g)); break;
        case MetricKind::Harmonic: columns.push_back(harmonic_all(g)); break;
        case MetricKind::Random:
            throw std::invalid_argument("metric must be miuz|degree|betweenness|harmonic|all");
        }
    }
    if (out_path.empty()) {
        write_metrics_csv(std::cout, g, columns);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write file: " + out_path);
        write_metrics_csv(out, g, columns);
    }
}

void cmd_attack(const std::string& graph_path, const std::string& metric,
                const std::string& mode, std::optional<std::uint64_t> seed,
                const std::string& trace_path) {
    const Graph g = read_edge_list_file(graph_path);
    const AttackTrace trace =
        run_attack(g, parse_metric_kind(metric), parse_attack_mode(mode), seed);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot write file: " + trace_path);
        write_trace_csv(out, trace);
    }
    std::cout << "R = " << format_real(r_index(trace)) << "\n";
    for (int a : {5, 10, 20, 30})
        if (a <= trace.original_n)
            std::cout << "R_" << a << " = " << format_real(r_a_index(trace, a)) << "\n";
}

struct BatchFlags {
    std::string config_path;
    std::vector<double> alphas;
    int replicates = 0;
    int n = 0;
    std::vector<std::string> metrics;
    std::string mode;
    std::vector<int> a_values;
    std::uint64_t master_seed = 0;
    bool seed_set = false;
    int k_min = 0;
    int k_max = -1;
    std::string out_path;
    std::string curves_path;
    int jobs = 0;
};

void cmd_batch(const BatchFlags& flags) {
    ExperimentConfig config;
    config.a_values = {5, 10, 20, 30};
    std::vector<std::string> missing = {"alphas", "replicates", "n", "metrics"};

    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) throw std::runtime_error("cannot open config file: " + flags.config_path);
        config = parse_batch_config(in, missing);
    }

    auto provided = [&](const std::string& key) {
        missing.erase(std::remove(missing.begin(), missing.end(), key), missing.end());
    };
    if (!flags.alphas.empty()) {
        config.alphas = flags.alphas;
        provided("alphas");
    }
    if (flags.replicates > 0) {
        config.replicates = flags.replicates;
        provided("replicates");
    }
    if (flags.n > 0) {
        config.n = flags.n;
        provided("n");
    }
    if (!flags.metrics.empty()) {
        config.metrics.clear();
        for (const auto& m : flags.metrics) config.metrics.push_back(parse_metric_kind(m));
        provided("metrics");
    }
    if (!flags.mode.empty()) config.mode = parse_attack_mode(flags.mode);
    if (!flags.a_values.empty()) config.a_values = flags.a_values;
    if (flags.seed_set) config.master_seed = flags.master_seed;
    if (flags.k_min > 0) config.k_min = flags.k_min;
    if (flags.k_max >= 0) config.k_max = flags.k_max;

    if (!missing.empty()) {
        std::string msg = "missing required config keys:";
        for (const auto& key : missing) msg += " " + key;
        throw std::runtime_error(msg);
    }
    config.validate();

    const int jobs = flags.jobs > 0
                         ? flags.jobs
                         : std::max(1u, std::thread::hardware_concurrency());
    const bool want_curves = !flags.curves_path.empty();
    const ExperimentResult result = run_experiment_full(
        config, jobs, /*keep_series=*/false,
        [](const std::string& line) { std::cerr << "[batch] " << line << "\n"; });

    std::ofstream out(flags.out_path);
    if (!out) throw std::runtime_error("cannot write file: " + flags.out_path);
    write_summary_csv(out, result.table);
    if (!out.flush()) throw std::runtime_error("write failed: " + flags.out_path);

    if (want_curves) {
        std::ofstream curves(flags.curves_path);
        if (!curves) throw std::runtime_error("cannot write file: " + flags.curves_path);
        write_curves_csv(curves, result);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scale-free network robustness toolkit: Miuz node-impact index, "
                 "centrality-driven attacks, R/R_a indices"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Generate a scale-free network edge list");
    GenSpec spec;
    std::string gen_out;
    gen->add_option("--n", spec.n, "node count")->required();
    gen->add_option("--alpha", spec.alpha, "power-law exponent (> 1)")->required();
    gen->add_option("--k-min", spec.k_min, "minimum degree (default 2)");
    gen->add_option("--k-max", spec.k_max, "maximum degree (default floor(sqrt(n)))");
    gen->add_option("--seed", spec.seed, "rng seed (default 0)");
    gen->add_option("--out", gen_out, "output edge-list path")->required();
    gen->callback([&]() { cmd_generate(spec, gen_out); });

    auto* met = app.add_subcommand("metrics", "Compute per-node metric scores as CSV");
    std::string met_graph, met_metric = "all", met_out;
    met->add_option("--graph", met_graph, "edge-list path")->required();
    met->add_option("--metric", met_metric, "miuz|degree|betweenness|harmonic|all");
    met->add_option("--out", met_out, "output CSV path (default stdout)");
    met->callback([&]() { cmd_metrics(met_graph, met_metric, met_out); });

    auto* atk = app.add_subcommand("attack", "Run a targeted attack and report R indices");
    std::string atk_graph, atk_metric, atk_mode = "sequential", atk_trace;
    std::uint64_t atk_seed = 0;
    bool atk_seed_set = false;
    atk->add_option("--graph", atk_graph, "edge-list path")->required();
    atk->add_option("--metric", atk_metric, "miuz|degree|betweenness|harmonic|random")
        ->required();
    atk->add_option("--mode", atk_mode, "sequential|simultaneous (default sequential)");
    atk->add_option("--seed", atk_seed, "rng seed (required for random)")
        ->each([&](const std::string&) { atk_seed_set = true; });
    atk->add_option("--trace-out", atk_trace, "write the strike trace CSV here");
    atk->callback([&]() {
        cmd_attack(atk_graph, atk_metric, atk_mode,
                   atk_seed_set ? std::optional<std::uint64_t>(atk_seed) : std::nullopt,
                   atk_trace);
    });

    auto* bat = app.add_subcommand("batch", "Sweep alphas x replicates x metrics; write summary CSV");
    BatchFlags flags;
    bat->add_option("--config", flags.config_path, "key = value config file");
    bat->add_option("--alphas", flags.alphas, "power-law exponents")->delimiter(',');
    bat->add_option("--replicates", flags.replicates, "networks per alpha");
    bat->add_option("--n", flags.n, "nodes per network");
    bat->add_option("--metrics", flags.metrics, "attack strategies")->delimiter(',');
    bat->add_option("--mode", flags.mode, "sequential|simultaneous");
    bat->add_option("--a-values", flags.a_values, "prefix sizes for R_a")->delimiter(',');
    bat->add_option("--seed", flags.master_seed, "master seed (default 0)")
        ->each([&](const std::string&) { flags.seed_set = true; });
    bat->add_option("--k-min", flags.k_min, "minimum degree");
    bat->add_option("--k-max", flags.k_max, "maximum degree (0 = structural cutoff)");
    bat->add_option("--out", flags.out_path, "summary CSV path")->required();
    bat->add_option("--curves-out", flags.curves_path, "mean s(Q) curves CSV path");
    bat->add_option("--jobs", flags.jobs, "worker threads (default: hardware)");
    bat->callback([&]() { cmd_batch(flags); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
