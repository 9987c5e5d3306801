#include "miuz/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "miuz/netgen.hpp"
#include "miuz/rng.hpp"

namespace miuz {

void ExperimentConfig::validate() const {
    if (alphas.empty()) throw std::invalid_argument("experiment config: no alphas");
    if (replicates < 1) throw std::invalid_argument("experiment config: replicates must be >= 1");
    if (n < 2) throw std::invalid_argument("experiment config: n must be at least 2");
    if (metrics.empty()) throw std::invalid_argument("experiment config: no metrics");
    for (int a : a_values)
        if (a < 1 || a > n)
            throw std::invalid_argument("experiment config: a value " + std::to_string(a) +
                                        " outside 1..n");
}

int strikes_to_half(const AttackTrace& trace) {
    for (const Strike& st : trace.strikes)
        if (st.s < 0.5) return st.q;
    return trace.original_n;
}

namespace {

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

// Sample standard deviation (n-1 denominator); 0 for a single value.
MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    const auto n = static_cast<double>(xs.size());
    for (double x : xs) out.mean += x;
    out.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(ss / (n - 1.0));
    }
    return out;
}

} // namespace

ExperimentResult run_experiment_full(const ExperimentConfig& config, int jobs,
                                     bool keep_series, const ProgressFn& progress) {
    config.validate();
    const int na = static_cast<int>(config.alphas.size());
    const int nm = static_cast<int>(config.metrics.size());
    const int nr = config.replicates;

    ExperimentResult result;
    result.alphas = config.alphas;
    result.metrics = config.metrics;
    result.cells.assign(na, std::vector<std::vector<CellStats>>(
                                nm, std::vector<CellStats>(nr)));

    // Work grid: one task per (alpha, replicate); all metrics inside the
    // task attack fresh copies of the same generated graph.
    struct Task {
        int ai;
        int ri;
    };
    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(na) * nr);
    for (int ai = 0; ai < na; ++ai)
        for (int ri = 0; ri < nr; ++ri) tasks.push_back({ai, ri});

    std::atomic<std::size_t> next_task{0};
    std::atomic<int> done_count{0};
    std::mutex progress_mutex;
    std::mutex error_mutex;
    std::vector<std::string> errors;

    auto worker = [&]() {
        for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= tasks.size()) return;
            const auto [ai, ri] = tasks[t];
            try {
                GenSpec spec;
                spec.n = config.n;
                spec.alpha = config.alphas[ai];
                spec.k_min = config.k_min;
                spec.k_max = config.k_max;
                spec.seed = mix_seed(config.master_seed, static_cast<std::uint64_t>(ai),
                                     static_cast<std::uint64_t>(ri));
                const Graph graph = generate(spec);

                for (int mi = 0; mi < nm; ++mi) {
                    const MetricKind kind = config.metrics[mi];
                    try {
                        std::optional<std::uint64_t> seed;
                        if (kind == MetricKind::Random)
                            seed = mix_seed(spec.seed, 0x72616e646f6dULL,
                                            static_cast<std::uint64_t>(mi));
                        const AttackTrace trace = run_attack(graph, kind, config.mode, seed);

                        CellStats& cell = result.cells[ai][mi][ri];
                        cell.r = r_index(trace);
                        cell.r_a.reserve(config.a_values.size());
                        for (int a : config.a_values)
                            cell.r_a.push_back(r_a_index(trace, a));
                        cell.strikes_to_half = strikes_to_half(trace);
                        cell.s_series.reserve(trace.strikes.size());
                        for (const Strike& st : trace.strikes)
                            cell.s_series.push_back(st.s);
                    } catch (const std::exception& e) {
                        throw std::runtime_error("metric=" + to_string(kind) + ": " +
                                                 e.what());
                    }
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                errors.push_back("alpha=" + std::to_string(config.alphas[ai]) +
                                 " replicate=" + std::to_string(ri) + " " + e.what());
                continue;
            }
            const int done = done_count.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress("alpha=" + std::to_string(config.alphas[ai]) + " replicate " +
                         std::to_string(ri + 1) + "/" + std::to_string(nr) + " done (" +
                         std::to_string(done) + "/" + std::to_string(tasks.size()) + ")");
            }
        }
    };

    const int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (!errors.empty()) {
        std::sort(errors.begin(), errors.end());
        std::string msg = "experiment failed for " + std::to_string(errors.size()) + " cell(s):";
        for (const auto& e : errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }

    // Deterministic reduction in index order, independent of completion order.
    result.curves.assign(na, std::vector<std::vector<double>>(nm));
    for (int ai = 0; ai < na; ++ai)
        for (int mi = 0; mi < nm; ++mi) {
            auto& curve = result.curves[ai][mi];
            curve.assign(static_cast<std::size_t>(config.n), 0.0);
            for (int ri = 0; ri < nr; ++ri) {
                const auto& s = result.cells[ai][mi][ri].s_series;
                for (std::size_t q = 0; q < s.size(); ++q) curve[q] += s[q];
                if (!keep_series) result.cells[ai][mi][ri].s_series = {};
            }
            for (double& v : curve) v /= static_cast<double>(nr);
        }

    result.table.a_values = config.a_values;
    for (int ai = 0; ai < na; ++ai) {
        for (int mi = 0; mi < nm; ++mi) {
            SummaryRow row;
            row.alpha = config.alphas[ai];
            row.metric = config.metrics[mi];
            row.replicates = nr;
            std::vector<double> rs(nr);
            for (int ri = 0; ri < nr; ++ri) rs[ri] = result.cells[ai][mi][ri].r;
            const MeanSd r = mean_sd(rs);
            row.r_mean = r.mean;
            row.r_sd = r.sd;
            for (std::size_t a = 0; a < config.a_values.size(); ++a) {
                std::vector<double> ras(nr);
                for (int ri = 0; ri < nr; ++ri) ras[ri] = result.cells[ai][mi][ri].r_a[a];
                const MeanSd ra = mean_sd(ras);
                row.ra_mean.push_back(ra.mean);
                row.ra_sd.push_back(ra.sd);
            }
            result.table.rows.push_back(std::move(row));
        }
    }
    std::sort(result.table.rows.begin(), result.table.rows.end(),
              [](const SummaryRow& a, const SummaryRow& b) {
                  if (a.alpha != b.alpha) return a.alpha < b.alpha;
                  return to_string(a.metric) < to_string(b.metric);
              });
    return result;
}

SummaryTable run_experiment(const ExperimentConfig& config, int jobs,
                            const ProgressFn& progress) {
    return run_experiment_full(config, jobs, /*keep_series=*/false, progress).table;
}

std::vector<std::vector<std::vector<double>>> lcc_curves(const ExperimentConfig& config,
                                                         int jobs) {
    return run_experiment_full(config, jobs, /*keep_series=*/true).curves;
}

} // namespace miuz
