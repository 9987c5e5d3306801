#ifndef MIUZ_HARNESS_HPP
#define MIUZ_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "miuz/attack.hpp"
#include "miuz/graph.hpp"
#include "miuz/metrics.hpp"

namespace miuz {

/// Batch sweep description: alphas x replicates networks, each attacked by
/// every listed metric (fresh copies of the same generated graph, so
/// comparisons are paired).
struct ExperimentConfig {
    std::vector<double> alphas;
    int replicates = 0;
    int n = 0;
    std::vector<MetricKind> metrics;
    AttackMode mode = AttackMode::Sequential;
    std::vector<int> a_values;
    std::uint64_t master_seed = 0;
    int k_min = 2;
    int k_max = 0; // 0 = structural cutoff

    void validate() const;
};

/// One (alpha, metric) aggregate over all replicates.
struct SummaryRow {
    double alpha = 0.0;
    MetricKind metric = MetricKind::Degree;
    int replicates = 0;
    double r_mean = 0.0;
    double r_sd = 0.0;
    std::vector<double> ra_mean; // parallel to a_values
    std::vector<double> ra_sd;
};

struct SummaryTable {
    std::vector<int> a_values;
    std::vector<SummaryRow> rows; // sorted by alpha, then metric name
};

/// Per-(alpha, metric, replicate) record kept by the full runner.
struct CellStats {
    double r = 0.0;
    std::vector<double> r_a;       // parallel to config.a_values
    int strikes_to_half = 0;
    std::vector<double> s_series;  // kept only when keep_series was requested
};

struct ExperimentResult {
    std::vector<double> alphas;
    std::vector<MetricKind> metrics;
    SummaryTable table;
    // curves[ai][mi][q-1] = mean s(q) over replicates
    std::vector<std::vector<std::vector<double>>> curves;
    // cells[ai][mi][ri]
    std::vector<std::vector<std::vector<CellStats>>> cells;
};

using ProgressFn = std::function<void(const std::string&)>;

/// Runs the whole grid. The (alpha, replicate) pairs fan out over `jobs`
/// worker threads; per-replicate seeds are derived from (master_seed,
/// alpha index, replicate index), so scheduling cannot perturb any result.
ExperimentResult run_experiment_full(const ExperimentConfig& config, int jobs,
                                     bool keep_series, const ProgressFn& progress = {});

SummaryTable run_experiment(const ExperimentConfig& config, int jobs = 1,
                            const ProgressFn& progress = {});

/// Mean s(Q) series per (alpha, metric), plot-ready.
std::vector<std::vector<std::vector<double>>> lcc_curves(const ExperimentConfig& config,
                                                         int jobs = 1);

/// Smallest q with s(q) < 0.5; original_n if the series never drops below.
int strikes_to_half(const AttackTrace& trace);

} // namespace miuz

#endif // MIUZ_HARNESS_HPP
