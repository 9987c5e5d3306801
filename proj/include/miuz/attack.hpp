#ifndef MIUZ_ATTACK_HPP
#define MIUZ_ATTACK_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "miuz/graph.hpp"
#include "miuz/metrics.hpp"

namespace miuz {

enum class AttackMode {
    Sequential,   // re-rank on the alive subgraph after every strike
    Simultaneous, // rank once on the intact graph
};

std::string to_string(AttackMode mode);
AttackMode parse_attack_mode(const std::string& name);

struct Strike {
    int q = 0;                      // strike index, 1-based
    NodeId node = -1;               // node disconnected at this strike
    double score_at_selection = 0;  // metric score that ranked it
    int lcc_after = 0;              // largest alive component after the strike
    double s = 0;                   // lcc_after / original_n
};

struct AttackStrategy {
    MetricKind kind = MetricKind::Degree;
    AttackMode mode = AttackMode::Sequential;
    std::optional<std::uint64_t> seed; // only the random strategy uses it
    // ties are always broken by lowest node id
};

struct AttackTrace {
    int original_n = 0;
    AttackStrategy strategy;
    std::vector<Strike> strikes; // exactly original_n records
};

/// Runs a targeted attack to exhaustion (all nodes struck). The graph is
/// taken by value; the caller's copy is untouched. Requires a fresh graph
/// (no node attacked yet); the random strategy requires a seed.
AttackTrace run_attack(Graph g, MetricKind kind, AttackMode mode,
                       std::optional<std::uint64_t> seed = std::nullopt);

/// Same attack loop driven by an arbitrary score function (higher = struck
/// first, ties by lowest id). The scorer sees the current alive subgraph in
/// sequential mode and the intact graph once in simultaneous mode.
using ScoreFn = std::function<std::vector<double>(const Graph&)>;
AttackTrace run_attack_with_scorer(Graph g, const ScoreFn& scorer, AttackMode mode);

/// R-index: mean of s(Q) over all Q = 1..N. Needs a complete trace.
double r_index(const AttackTrace& trace);

/// Prefix variant over the first a strikes, 1 <= a <= original_n.
/// r_a_index(trace, original_n) == r_index(trace).
double r_a_index(const AttackTrace& trace, int a);

/// First strike q at which the miuz trace's s(q) is strictly above the best
/// (minimal) s(q) among the other strategies; nullopt if miuz stays minimal
/// (ties count as still best). All traces must share original_n and a miuz
/// trace must be present.
std::optional<int> breaking_point(const std::map<MetricKind, AttackTrace>& traces);

struct ResilienceResult {
    int count = 0;
    bool exhausted = false;
};

/// Disconnects nodes sequentially by the given metric until the maximum
/// Miuz over alive nodes exceeds the threshold. Returns how many strikes
/// that took (0 if the intact graph already exceeds it), or exhausted=true
/// with count = original_n if it never does.
ResilienceResult resilience_count(Graph g, MetricKind kind, double threshold,
                                  std::optional<std::uint64_t> seed = std::nullopt);

} // namespace miuz

#endif // MIUZ_ATTACK_HPP
