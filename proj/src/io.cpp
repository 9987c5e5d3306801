#include "miuz/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace miuz {

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    int declared_nodes = -1;
    NodeId max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank
        if (first[0] == '#') {
            std::string word;
            long long n;
            std::istringstream pragma(line.substr(line.find('#') + 1));
            if (pragma >> word >> n && word == "nodes" && n >= 0)
                declared_nodes = static_cast<int>(n);
            continue;
        }
        long long u, v;
        char extra;
        std::istringstream pair_ls(line);
        if (!(pair_ls >> u >> v) || (pair_ls >> extra))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected two integers, got '" + line + "'");
        if (u < 0 || v < 0)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": negative node id");
        if (u == v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": self-loop " + std::to_string(u));
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_id = std::max({max_id, static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
    const int node_count = declared_nodes >= 0 ? declared_nodes : max_id + 1;
    return build_graph(edges, node_count);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_edge_list(out, g);
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_trace_csv(std::ostream& out, const AttackTrace& trace) {
    out << "q,node,metric,score,lcc,s\n";
    const std::string metric = to_string(trace.strategy.kind);
    for (const Strike& st : trace.strikes)
        out << st.q << ',' << st.node << ',' << metric << ','
            << format_real(st.score_at_selection) << ',' << st.lcc_after << ','
            << format_real(st.s) << "\n";
}

void write_metrics_csv(std::ostream& out, const Graph& g,
                       const std::vector<MetricVector>& columns) {
    if (columns.empty()) throw std::invalid_argument("write_metrics_csv: no columns");
    out << "node";
    if (columns.size() == 1)
        out << ",score";
    else
        for (const auto& col : columns) out << ',' << to_string(col.kind);
    out << "\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.alive(v)) continue;
        out << v;
        for (const auto& col : columns) out << ',' << format_real(col.scores[v]);
        out << "\n";
    }
}

void write_summary_csv(std::ostream& out, const SummaryTable& table) {
    out << "alpha,metric,replicates,R_mean,R_sd";
    for (int a : table.a_values) out << ",R" << a << "_mean,R" << a << "_sd";
    out << "\n";
    for (const SummaryRow& row : table.rows) {
        out << format_real(row.alpha) << ',' << to_string(row.metric) << ','
            << row.replicates << ',' << format_real(row.r_mean) << ','
            << format_real(row.r_sd);
        for (std::size_t i = 0; i < row.ra_mean.size(); ++i)
            out << ',' << format_real(row.ra_mean[i]) << ',' << format_real(row.ra_sd[i]);
        out << "\n";
    }
}

void write_curves_csv(std::ostream& out, const ExperimentResult& result) {
    out << "alpha,metric,q,s_mean\n";
    // Row order mirrors the summary: alpha ascending, metric name ascending.
    std::vector<std::pair<int, int>> keys;
    for (int ai = 0; ai < static_cast<int>(result.alphas.size()); ++ai)
        for (int mi = 0; mi < static_cast<int>(result.metrics.size()); ++mi)
            keys.emplace_back(ai, mi);
    std::sort(keys.begin(), keys.end(), [&](auto a, auto b) {
        if (result.alphas[a.first] != result.alphas[b.first])
            return result.alphas[a.first] < result.alphas[b.first];
        return to_string(result.metrics[a.second]) < to_string(result.metrics[b.second]);
    });
    for (const auto& [ai, mi] : keys) {
        const auto& curve = result.curves[ai][mi];
        for (std::size_t q = 0; q < curve.size(); ++q)
            out << format_real(result.alphas[ai]) << ',' << to_string(result.metrics[mi])
                << ',' << (q + 1) << ',' << format_real(curve[q]) << "\n";
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

ExperimentConfig parse_batch_config(std::istream& in, std::vector<std::string>& missing) {
    ExperimentConfig config;
    config.a_values = {5, 10, 20, 30};
    bool saw_alphas = false, saw_replicates = false, saw_n = false, saw_metrics = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "alphas") {
                config.alphas.clear();
                for (const auto& item : split_list(value))
                    config.alphas.push_back(std::stod(item));
                saw_alphas = true;
            } else if (key == "replicates") {
                config.replicates = std::stoi(value);
                saw_replicates = true;
            } else if (key == "n") {
                config.n = std::stoi(value);
                saw_n = true;
            } else if (key == "metrics") {
                config.metrics.clear();
                for (const auto& item : split_list(value))
                    config.metrics.push_back(parse_metric_kind(item));
                saw_metrics = true;
            } else if (key == "mode") {
                config.mode = parse_attack_mode(value);
            } else if (key == "a_values") {
                config.a_values.clear();
                for (const auto& item : split_list(value))
                    config.a_values.push_back(std::stoi(item));
            } else if (key == "master_seed") {
                config.master_seed = std::stoull(value);
            } else if (key == "k_min") {
                config.k_min = std::stoi(value);
            } else if (key == "k_max") {
                config.k_max = std::stoi(value);
            } else {
                throw std::runtime_error("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    missing.clear();
    if (!saw_alphas) missing.push_back("alphas");
    if (!saw_replicates) missing.push_back("replicates");
    if (!saw_n) missing.push_back("n");
    if (!saw_metrics) missing.push_back("metrics");
    return config;
}

} // namespace miuz
