#ifndef MIUZ_IO_HPP
#define MIUZ_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "miuz/attack.hpp"
#include "miuz/graph.hpp"
#include "miuz/harness.hpp"
#include "miuz/metrics.hpp"

namespace miuz {

// Text edge list: one "u v" pair per line, undirected, each edge once in
// either orientation. Blank lines and '#' comments are ignored, except the
// "# nodes <N>" pragma the writer emits so isolated trailing nodes survive
// a round trip. Without the pragma, node count = max id + 1.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Real formatted with 6 significant digits (CSV and stdout convention).
std::string format_real(double v);

/// CSV "q,node,metric,score,lcc,s", rows in strike order.
void write_trace_csv(std::ostream& out, const AttackTrace& trace);

/// CSV "node,score" for one metric, or "node,miuz,degree,betweenness,harmonic"
/// when all four are given. Dead nodes are skipped.
void write_metrics_csv(std::ostream& out, const Graph& g,
                       const std::vector<MetricVector>& columns);

/// CSV "alpha,metric,replicates,R_mean,R_sd" plus "R<a>_mean,R<a>_sd" per
/// configured a value; rows sorted by alpha then metric name.
void write_summary_csv(std::ostream& out, const SummaryTable& table);

/// CSV "alpha,metric,q,s_mean" in deterministic row order.
void write_curves_csv(std::ostream& out, const ExperimentResult& result);

/// key = value text config for batch runs ('#' comments allowed). Returns
/// the parsed config; `missing` collects required keys that were absent.
ExperimentConfig parse_batch_config(std::istream& in, std::vector<std::string>& missing);

} // namespace miuz

#endif // MIUZ_IO_HPP
