// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. argv[1] must point at the miuz CLI binary (the
// determinism criterion runs it). Run via ctest or directly:
//
//     ./acceptance /path/to/miuz
//
// The desk-scale sweep reproduces the experimental protocol on 50 networks
// of 1000 nodes per exponent. Ordering and band criteria are asserted; the
// measured values are printed alongside for the record.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>
#include <vector>

#include "miuz/attack.hpp"
#include "miuz/graph.hpp"
#include "miuz/harness.hpp"
#include "miuz/io.hpp"
#include "miuz/metrics.hpp"
#include "miuz/netgen.hpp"
#include "miuz/oracles.hpp"
#include "miuz/rng.hpp"

namespace fs = std::filesystem;
using namespace miuz;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) { return format_real(v); }

// --- small-graph corpus (mixed densities, >= 200 seeded graphs) -------------

Graph random_graph(int n, double p, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (next_unit(rng) < p) edges.emplace_back(i, j);
    return build_graph(edges, n);
}

std::vector<Graph> oracle_corpus() {
    std::vector<Graph> corpus;
    const double densities[] = {0.03, 0.06, 0.1, 0.15, 0.25, 0.4, 0.6, 0.85};
    for (int i = 0; i < 240; ++i) {
        const int n = 5 + (i * 11) % 46; // 5..50
        const double p = densities[i % 8];
        corpus.push_back(random_graph(n, p, 0xACCE57 + static_cast<std::uint64_t>(i)));
    }
    return corpus;
}

Graph star_graph(int leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build_graph(edges, leaves + 1);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(edges, n);
}

Graph complete_graph(int n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(edges, n);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return build_graph(edges, a + b);
}

// --- criteria ----------------------------------------------------------------

void criterion_oracle_equivalence(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    long long nodes_checked = 0;
    double max_bc_diff = 0.0;
    bool miuz_ok = true;
    for (const Graph& g : corpus) {
        const auto fast = miuz_all_exact(g);
        const auto bc_fast = betweenness_all(g);
        const auto bc_slow = betweenness_bruteforce(g);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!(fast[v] == miuz_bruteforce_exact(g, v))) miuz_ok = false;
            max_bc_diff = std::max(max_bc_diff,
                                   std::abs(bc_fast.scores[v] - bc_slow.scores[v]));
            ++nodes_checked;
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = miuz_ok && max_bc_diff <= 1e-9 && seconds < 30.0;
    report(1, "oracle-equivalence", pass,
           std::to_string(corpus.size()) + " graphs, " + std::to_string(nodes_checked) +
               " nodes; miuz rational equality " + (miuz_ok ? "exact" : "VIOLATED") +
               "; max |betweenness diff| = " + fmt(max_bc_diff) + " (tol 1e-9); " +
               fmt(seconds) + " s (< 30 s)");
}

void criterion_articulation_equivalence(const std::vector<Graph>& corpus) {
    long long violations = 0;
    for (const Graph& g : corpus) {
        const auto cuts = articulation_points(g);
        const std::set<NodeId> cut_set(cuts.begin(), cuts.end());
        const auto scores = miuz_all_exact(g);
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (scores[v].positive() != (cut_set.count(v) > 0)) ++violations;
    }
    report(2, "articulation-equivalence", violations == 0,
           std::to_string(violations) + " violations across " +
               std::to_string(corpus.size()) + " graphs");
}

void criterion_range_endpoints() {
    bool pass = true;
    std::string detail;
    for (int n : {4, 10, 100}) {
        const Graph star = star_graph(n - 1);
        const double center = miuz_single(star, 0);
        if (center != static_cast<double>(n - 1)) pass = false;
        detail += "star N=" + std::to_string(n) + " center=" + fmt(center) + "; ";
    }
    int nonzero = 0;
    for (const Graph& g : {cycle_graph(4), cycle_graph(100), complete_graph(4),
                           complete_graph(7), complete_bipartite(3, 3)}) {
        for (const MiuzValue& v : miuz_all_exact(g))
            if (v.positive()) ++nonzero;
    }
    if (nonzero != 0) pass = false;
    detail += "biconnected graphs nonzero scores: " + std::to_string(nonzero);
    report(3, "range-endpoints", pass, detail);
}

void criterion_r_identities() {
    double max_gap = 0.0;
    std::vector<AttackTrace> traces;
    for (int i = 0; i < 12; ++i) {
        const Graph g = random_graph(8 + 3 * i, 0.25, 0x1D + static_cast<std::uint64_t>(i));
        for (MetricKind kind : {MetricKind::Miuz, MetricKind::Degree,
                                MetricKind::Betweenness, MetricKind::Harmonic})
            traces.push_back(run_attack(g, kind, AttackMode::Sequential));
    }
    traces.push_back(run_attack(star_graph(3), MetricKind::Miuz, AttackMode::Sequential));
    for (const AttackTrace& trace : traces)
        max_gap = std::max(max_gap,
                           std::abs(r_a_index(trace, trace.original_n) - r_index(trace)));

    const double star_r = r_index(traces.back());
    const bool pass = max_gap <= 1e-12 && star_r == 0.1875;
    report(4, "r-identities", pass,
           "max |R_N - R| = " + fmt(max_gap) + " over " + std::to_string(traces.size()) +
               " traces (tol 1e-12); star K_{1,3} miuz R = " + fmt(star_r) +
               " (expect exactly 0.1875)");
}

struct Sweep {
    ExperimentConfig config;
    ExperimentResult result;
    int miuz_index = -1;
};

// Desk-scale sweep. Runs with k_min=1: a degree-1 periphery puts the
// networks in the fragile regime the band checks below are calibrated to
// (the CLI default k_min=2 yields far more robust networks; the ordering
// checks hold there too, the bands do not).
Sweep run_sweep() {
    Sweep sweep;
    sweep.config.alphas = {2.1, 2.2, 2.3};
    sweep.config.replicates = 50;
    sweep.config.n = 1000;
    sweep.config.metrics = {MetricKind::Miuz, MetricKind::Degree,
                            MetricKind::Betweenness, MetricKind::Harmonic};
    sweep.config.mode = AttackMode::Sequential;
    sweep.config.a_values = {5, 10, 20, 30};
    sweep.config.master_seed = 424242;
    sweep.config.k_min = 1;
    sweep.config.k_max = 0;
    sweep.miuz_index = 0;

    const auto start = std::chrono::steady_clock::now();
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    sweep.result = run_experiment_full(sweep.config, static_cast<int>(hw), true,
                                       [](const std::string& line) {
                                           std::cerr << "[sweep] " << line << "\n";
                                       });
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "[sweep] completed in " << fmt(seconds) << " s\n";
    return sweep;
}

const SummaryRow& find_row(const SummaryTable& table, double alpha, MetricKind metric) {
    for (const SummaryRow& row : table.rows)
        if (row.alpha == alpha && row.metric == metric) return row;
    throw std::runtime_error("summary row missing");
}

void criterion_early_strike_ordering(const Sweep& sweep) {
    const auto& table = sweep.result.table;
    const std::size_t i5 = 0, i10 = 1; // a_values are {5, 10, 20, 30}
    const SummaryRow& miuz = find_row(table, 2.1, MetricKind::Miuz);
    bool pass = true;
    std::string detail = "alpha=2.1, 50 nets: R_5 miuz=" + fmt(miuz.ra_mean[i5]) +
                         " sd=" + fmt(miuz.ra_sd[i5]);
    for (MetricKind other : {MetricKind::Degree, MetricKind::Betweenness,
                             MetricKind::Harmonic}) {
        const SummaryRow& row = find_row(table, 2.1, other);
        if (miuz.ra_mean[i5] > row.ra_mean[i5]) pass = false;
        if (miuz.ra_mean[i10] > row.ra_mean[i10]) pass = false;
        detail += ", " + to_string(other) + "=" + fmt(row.ra_mean[i5]);
    }
    detail += "; R_10 miuz=" + fmt(miuz.ra_mean[i10]);
    for (MetricKind other : {MetricKind::Degree, MetricKind::Betweenness,
                             MetricKind::Harmonic})
        detail += ", " + to_string(other) + "=" +
                  fmt(find_row(table, 2.1, other).ra_mean[i10]);
    report(5, "early-strike-ordering-R5-R10", pass, detail);
}

void criterion_full_r_ordering(const Sweep& sweep) {
    const SummaryRow& miuz = find_row(sweep.result.table, 2.1, MetricKind::Miuz);
    const SummaryRow& harmonic = find_row(sweep.result.table, 2.1, MetricKind::Harmonic);
    const bool pass = harmonic.r_mean <= miuz.r_mean;
    report(6, "full-attack-ordering-harmonic-R", pass,
           "alpha=2.1: R harmonic=" + fmt(harmonic.r_mean) + " sd=" + fmt(harmonic.r_sd) +
               " vs miuz=" + fmt(miuz.r_mean) + " sd=" + fmt(miuz.r_sd));
}

void criterion_half_network_strikes(const Sweep& sweep) {
    std::string detail;
    int median_21 = -1;
    for (std::size_t ai = 0; ai < sweep.config.alphas.size(); ++ai) {
        std::vector<int> halves;
        for (const CellStats& cell : sweep.result.cells[ai][sweep.miuz_index])
            halves.push_back(cell.strikes_to_half);
        std::sort(halves.begin(), halves.end());
        const int median = halves[halves.size() / 2];
        if (sweep.config.alphas[ai] == 2.1) median_21 = median;
        detail += "alpha=" + fmt(sweep.config.alphas[ai]) +
                  " median=" + std::to_string(median) + "; ";
    }
    const bool pass = median_21 >= 4 && median_21 <= 25;
    report(7, "half-network-strike-count", pass,
           detail + "band [4,25] applies to the alpha=2.1 median");
}

void criterion_breaking_point(const Sweep& sweep) {
    double s_sum = 0.0;
    int with_bp = 0, total = 0;
    std::string detail;
    for (std::size_t ai = 0; ai < sweep.config.alphas.size(); ++ai) {
        std::vector<int> qstars;
        for (int ri = 0; ri < sweep.config.replicates; ++ri) {
            std::map<MetricKind, AttackTrace> traces;
            for (std::size_t mi = 0; mi < sweep.config.metrics.size(); ++mi) {
                AttackTrace trace;
                trace.original_n = sweep.config.n;
                trace.strategy.kind = sweep.config.metrics[mi];
                const auto& series = sweep.result.cells[ai][mi][ri].s_series;
                for (int q = 1; q <= sweep.config.n; ++q)
                    trace.strikes.push_back({q, q - 1, 0.0, 0, series[q - 1]});
                traces[sweep.config.metrics[mi]] = std::move(trace);
            }
            ++total;
            const auto q_star = breaking_point(traces);
            if (q_star) {
                ++with_bp;
                qstars.push_back(*q_star);
                s_sum += sweep.result.cells[ai][sweep.miuz_index][ri]
                             .s_series[*q_star - 1];
            }
        }
        std::sort(qstars.begin(), qstars.end());
        detail += "alpha=" + fmt(sweep.config.alphas[ai]) + " median q*=" +
                  (qstars.empty() ? std::string("none")
                                  : std::to_string(qstars[qstars.size() / 2])) +
                  "; ";
    }
    const double mean_s = with_bp > 0 ? s_sum / with_bp : 0.0;
    const bool pass = with_bp == 0 || mean_s < 0.45;
    report(8, "breaking-point-band", pass,
           detail + "breaking point in " + std::to_string(with_bp) + "/" +
               std::to_string(total) + " runs, mean s_miuz(q*) = " + fmt(mean_s) +
               " (band < 0.45)");
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_batch_determinism(const std::string& cli) {
    if (cli.empty()) {
        report(9, "batch-jobs-determinism", false, "no CLI binary path given");
        return;
    }
    const fs::path dir =
        fs::temp_directory_path() / ("miuz_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path a = dir / "jobs1.csv";
    const fs::path b = dir / "jobs8.csv";
    const std::string base =
        cli + " batch --alphas 2.1,2.3 --replicates 4 --n 60"
              " --metrics miuz,degree,betweenness,harmonic,random"
              " --a-values 5,10 --seed 777";
    const std::string quiet = " 2> /dev/null";
    const int rc1 = std::system((base + " --jobs 1 --out " + a.string() + quiet).c_str());
    const int rc8 = std::system((base + " --jobs 8 --out " + b.string() + quiet).c_str());
    const std::string out1 = slurp(a);
    const std::string out8 = slurp(b);
    const bool pass = WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc8) == 0 && !out1.empty() &&
                      out1 == out8;
    report(9, "batch-jobs-determinism", pass,
           std::string("cmd_batch --jobs 1 vs --jobs 8: ") +
               (pass ? "byte-identical summaries (" + std::to_string(out1.size()) +
                           " bytes)"
                     : "outputs differ or command failed"));
    fs::remove_all(dir);
}

void criterion_generator_sanity() {
    GenSpec spec;
    spec.n = 100000;
    spec.alpha = 2.5;
    spec.k_min = 2;
    spec.k_max = 0;
    spec.seed = 31337;
    auto rng = make_rng(spec.seed);
    const auto degrees = sample_degree_sequence(spec, rng);
    long long count2 = 0, count4 = 0;
    for (int d : degrees) {
        if (d == 2) ++count2;
        if (d == 4) ++count4;
    }
    const auto pmf = power_law_pmf(spec.alpha, spec.k_min, spec.effective_k_max());
    const double exact = pmf[0] / pmf[2];
    const double empirical = static_cast<double>(count2) / static_cast<double>(count4);
    const double rel = std::abs(empirical / exact - 1.0);
    report(10, "generator-sanity", rel <= 0.05,
           "n=1e5, alpha=2.5: P(2)/P(4) empirical=" + fmt(empirical) + " exact=" +
               fmt(exact) + " rel err=" + fmt(rel) + " (tol 0.05)");
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    const auto corpus = oracle_corpus();
    criterion_oracle_equivalence(corpus);
    criterion_articulation_equivalence(corpus);
    criterion_range_endpoints();
    criterion_r_identities();

    const Sweep sweep = run_sweep();
    criterion_early_strike_ordering(sweep);
    criterion_full_r_ordering(sweep);
    criterion_half_network_strikes(sweep);
    criterion_breaking_point(sweep);

    criterion_batch_determinism(cli);
    criterion_generator_sanity();

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
