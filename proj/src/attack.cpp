#include "miuz/attack.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "miuz/rng.hpp"

namespace miuz {

std::string to_string(AttackMode mode) {
    return mode == AttackMode::Sequential ? "sequential" : "simultaneous";
}

AttackMode parse_attack_mode(const std::string& name) {
    if (name == "sequential") return AttackMode::Sequential;
    if (name == "simultaneous") return AttackMode::Simultaneous;
    throw std::invalid_argument("unknown attack mode: " + name);
}

namespace {

std::vector<double> scores_for(const Graph& g, MetricKind kind) {
    switch (kind) {
    case MetricKind::Miuz: return miuz_all(g).scores;
    case MetricKind::Degree: return degree_all(g).scores;
    case MetricKind::Betweenness: return betweenness_all(g).scores;
    case MetricKind::Harmonic: return harmonic_all(g).scores;
    case MetricKind::Random: break;
    }
    throw std::invalid_argument("no score function for this strategy");
}

// Argmax over alive nodes; only strictly greater replaces, so ties resolve
// to the lowest id.
template <typename Score, typename Less>
NodeId argmax_alive(const Graph& g, const std::vector<Score>& s, Less less) {
    NodeId best = -1;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.alive(v)) continue;
        if (best < 0 || less(s[best], s[v])) best = v;
    }
    return best;
}

struct Selection {
    NodeId node;
    double score;
};

Selection select_sequential(const Graph& g, MetricKind kind) {
    if (kind == MetricKind::Miuz) {
        const auto exact = miuz_all_exact(g);
        NodeId best = argmax_alive(g, exact, std::less<MiuzValue>{});
        return {best, exact[best].value()};
    }
    const auto scores = scores_for(g, kind);
    NodeId best = argmax_alive(g, scores, std::less<double>{});
    return {best, scores[best]};
}

template <typename Score, typename Less>
std::vector<NodeId> ranked_ids(const Graph& g, const std::vector<Score>& s, Less less) {
    std::vector<NodeId> ids;
    ids.reserve(g.alive_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.alive(v)) ids.push_back(v);
    std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
        if (less(s[b], s[a])) return true;
        if (less(s[a], s[b])) return false;
        return a < b;
    });
    return ids;
}

void record_strike(AttackTrace& trace, Graph& g, NodeId node, double score) {
    g.disconnect(node);
    const auto census = connected_components(g, /*restrict_to_alive=*/true);
    Strike st;
    st.q = static_cast<int>(trace.strikes.size()) + 1;
    st.node = node;
    st.score_at_selection = score;
    st.lcc_after = census.largest();
    st.s = static_cast<double>(st.lcc_after) / static_cast<double>(trace.original_n);
    trace.strikes.push_back(st);
}

void require_fresh(const Graph& g) {
    if (g.alive_count() != g.node_count())
        throw std::invalid_argument("attack requires a fresh graph (some nodes already attacked)");
    if (g.node_count() == 0)
        throw std::invalid_argument("attack requires a non-empty graph");
}

std::vector<NodeId> shuffled_ids(const Graph& g, std::uint64_t seed) {
    std::vector<NodeId> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), 0);
    auto rng = make_rng(seed);
    shuffle_in_place(ids, rng);
    return ids;
}

} // namespace

AttackTrace run_attack(Graph g, MetricKind kind, AttackMode mode,
                       std::optional<std::uint64_t> seed) {
    require_fresh(g);
    if (kind == MetricKind::Random && !seed)
        throw std::invalid_argument("random strategy requires a seed");

    AttackTrace trace;
    trace.original_n = g.node_count();
    trace.strategy = {kind, mode, kind == MetricKind::Random ? seed : std::nullopt};
    trace.strikes.reserve(trace.original_n);

    if (kind == MetricKind::Random) {
        // One seeded shuffle fixes the whole order; mode makes no difference.
        for (NodeId v : shuffled_ids(g, *seed)) record_strike(trace, g, v, 0.0);
        return trace;
    }

    if (mode == AttackMode::Sequential) {
        while (g.alive_count() > 0) {
            const Selection pick = select_sequential(g, kind);
            record_strike(trace, g, pick.node, pick.score);
        }
        return trace;
    }

    // Simultaneous: rank once on the intact graph.
    if (kind == MetricKind::Miuz) {
        const auto exact = miuz_all_exact(g);
        for (NodeId v : ranked_ids(g, exact, std::less<MiuzValue>{}))
            record_strike(trace, g, v, exact[v].value());
    } else {
        const auto scores = scores_for(g, kind);
        for (NodeId v : ranked_ids(g, scores, std::less<double>{}))
            record_strike(trace, g, v, scores[v]);
    }
    return trace;
}

AttackTrace run_attack_with_scorer(Graph g, const ScoreFn& scorer, AttackMode mode) {
    require_fresh(g);
    AttackTrace trace;
    trace.original_n = g.node_count();
    trace.strategy = {MetricKind::Degree, mode, std::nullopt};
    trace.strikes.reserve(trace.original_n);

    if (mode == AttackMode::Sequential) {
        while (g.alive_count() > 0) {
            const auto scores = scorer(g);
            NodeId best = argmax_alive(g, scores, std::less<double>{});
            record_strike(trace, g, best, scores[best]);
        }
        return trace;
    }
    const auto scores = scorer(g);
    for (NodeId v : ranked_ids(g, scores, std::less<double>{}))
        record_strike(trace, g, v, scores[v]);
    return trace;
}

double r_index(const AttackTrace& trace) {
    if (trace.original_n <= 0 ||
        static_cast<int>(trace.strikes.size()) != trace.original_n)
        throw std::invalid_argument("r_index requires a complete trace");
    double sum = 0.0;
    for (const Strike& st : trace.strikes) sum += st.s;
    return sum / static_cast<double>(trace.original_n);
}

double r_a_index(const AttackTrace& trace, int a) {
    if (a < 1 || a > trace.original_n)
        throw std::invalid_argument("r_a_index: a out of range 1.." +
                                    std::to_string(trace.original_n));
    if (static_cast<int>(trace.strikes.size()) < a)
        throw std::invalid_argument("r_a_index: trace shorter than a");
    double sum = 0.0;
    for (int q = 0; q < a; ++q) sum += trace.strikes[q].s;
    return sum / static_cast<double>(a);
}

std::optional<int> breaking_point(const std::map<MetricKind, AttackTrace>& traces) {
    auto miuz_it = traces.find(MetricKind::Miuz);
    if (miuz_it == traces.end())
        throw std::invalid_argument("breaking_point: miuz trace missing");
    const int n = miuz_it->second.original_n;
    for (const auto& [kind, trace] : traces) {
        if (trace.original_n != n)
            throw std::invalid_argument("breaking_point: traces disagree on original_n");
        if (static_cast<int>(trace.strikes.size()) != n)
            throw std::invalid_argument("breaking_point: incomplete trace for " + to_string(kind));
    }

    for (int q = 1; q <= n; ++q) {
        double best_other = std::numeric_limits<double>::infinity();
        for (const auto& [kind, trace] : traces)
            if (kind != MetricKind::Miuz)
                best_other = std::min(best_other, trace.strikes[q - 1].s);
        if (miuz_it->second.strikes[q - 1].s > best_other) return q;
    }
    return std::nullopt;
}

ResilienceResult resilience_count(Graph g, MetricKind kind, double threshold,
                                  std::optional<std::uint64_t> seed) {
    if (threshold < 0.0)
        throw std::invalid_argument("resilience_count: negative threshold");
    require_fresh(g);
    if (kind == MetricKind::Random && !seed)
        throw std::invalid_argument("random strategy requires a seed");

    const int original_n = g.node_count();
    std::vector<NodeId> random_order;
    if (kind == MetricKind::Random) random_order = shuffled_ids(g, *seed);

    int count = 0;
    for (;;) {
        if (g.alive_count() > 0) {
            const auto exact = miuz_all_exact(g);
            MiuzValue max;
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (g.alive(v) && max < exact[v]) max = exact[v];
            if (max.value() > threshold) return {count, false};
        }
        if (g.alive_count() == 0) return {original_n, true};

        NodeId next;
        if (kind == MetricKind::Random) {
            next = random_order[count];
        } else {
            next = select_sequential(g, kind).node;
        }
        g.disconnect(next);
        ++count;
    }
}

} // namespace miuz
