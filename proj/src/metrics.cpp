#include "miuz/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace miuz {

const double kNoScore = std::numeric_limits<double>::quiet_NaN();

bool MetricVector::has_score(NodeId n) const {
    return !std::isnan(scores[n]);
}

std::string to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::Miuz: return "miuz";
    case MetricKind::Degree: return "degree";
    case MetricKind::Betweenness: return "betweenness";
    case MetricKind::Harmonic: return "harmonic";
    case MetricKind::Random: return "random";
    }
    throw std::invalid_argument("unknown metric kind");
}

MetricKind parse_metric_kind(const std::string& name) {
    if (name == "miuz") return MetricKind::Miuz;
    if (name == "degree") return MetricKind::Degree;
    if (name == "betweenness") return MetricKind::Betweenness;
    if (name == "harmonic") return MetricKind::Harmonic;
    if (name == "random") return MetricKind::Random;
    throw std::invalid_argument("unknown metric: " + name);
}

namespace {

// Component census of the alive subgraph with node `skip`'s edges ignored
// (skip itself stays in the census as a singleton). Returns component count
// and the largest size. With skip < 0, the census is the plain alive one.
struct Census {
    int count = 0;
    int largest = 0;
};

Census census_without_edges_of(const Graph& g, NodeId skip) {
    const int n = g.node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack;
    Census c;
    for (NodeId s = 0; s < n; ++s) {
        if (!g.alive(s) || seen[s]) continue;
        seen[s] = 1;
        int size = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++size;
            if (u == skip) continue;
            for (NodeId v : g.neighbors(u)) {
                if (v == skip || seen[v]) continue;
                seen[v] = 1;
                stack.push_back(v);
            }
        }
        ++c.count;
        c.largest = std::max(c.largest, size);
    }
    return c;
}

} // namespace

MiuzValue miuz_single_exact(const Graph& g, NodeId n) {
    if (n < 0 || n >= g.node_count() || !g.alive(n))
        throw std::invalid_argument("miuz_single: node " + std::to_string(n) + " is not alive");
    if (g.degree(n) == 0) return {};

    const Census before = census_without_edges_of(g, -1);
    const Census after = census_without_edges_of(g, n);
    if (after.count == before.count + 1) return {};
    return MiuzValue{g.alive_count(), after.largest};
}

double miuz_single(const Graph& g, NodeId n) {
    return miuz_single_exact(g, n).value();
}

std::vector<MiuzValue> miuz_all_exact(const Graph& g) {
    const int n = g.node_count();
    std::vector<MiuzValue> out(n);

    // Pass 1: components of the alive subgraph, sizes, two largest.
    std::vector<int> comp(n, kNoComponent);
    std::vector<int> comp_size;
    {
        std::vector<NodeId> stack;
        for (NodeId s = 0; s < n; ++s) {
            if (!g.alive(s) || comp[s] != kNoComponent) continue;
            int id = static_cast<int>(comp_size.size());
            int size = 0;
            comp[s] = id;
            stack.push_back(s);
            while (!stack.empty()) {
                NodeId u = stack.back();
                stack.pop_back();
                ++size;
                for (NodeId v : g.neighbors(u))
                    if (comp[v] == kNoComponent) {
                        comp[v] = id;
                        stack.push_back(v);
                    }
            }
            comp_size.push_back(size);
        }
    }
    int max1 = 0, max2 = 0; // two largest component sizes
    int max1_id = -1;
    for (std::size_t i = 0; i < comp_size.size(); ++i) {
        if (comp_size[i] > max1) {
            max2 = max1;
            max1 = comp_size[i];
            max1_id = static_cast<int>(i);
        } else if (comp_size[i] > max2) {
            max2 = comp_size[i];
        }
    }

    // Pass 2: DFS low-link with subtree sizes. For each node, record the
    // largest child subtree that separates (low[child] >= disc[node]) and
    // the total size split off that way; the remainder of its component is
    // the piece holding the DFS root.
    std::vector<int> disc(n, -1), low(n, 0), subtree(n, 1);
    std::vector<int> split_max(n, 0), split_sum(n, 0), split_cnt(n, 0);
    int timer = 0;

    struct Frame {
        NodeId v;
        NodeId parent;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (NodeId root = 0; root < n; ++root) {
        if (!g.alive(root) || disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                NodeId w = nb[f.next++];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const NodeId done = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    subtree[p.v] += subtree[done];
                    low[p.v] = std::min(low[p.v], low[done]);
                    if (low[done] >= disc[p.v]) {
                        split_max[p.v] = std::max(split_max[p.v], subtree[done]);
                        split_sum[p.v] += subtree[done];
                        ++split_cnt[p.v];
                    }
                }
            }
        }
    }

    const std::int64_t total = g.alive_count();
    for (NodeId v = 0; v < n; ++v) {
        if (!g.alive(v)) continue;
        if (g.degree(v) == 0) continue; // isolated: defined zero
        const int size = comp_size[comp[v]];
        const bool is_root = (disc[v] != -1 && subtree[v] == size);
        const bool is_cut = is_root ? split_cnt[v] >= 2 : split_cnt[v] >= 1;
        if (!is_cut) continue; // census count rises by exactly one: zero

        // Pieces of v's component: the separated child subtrees plus, for a
        // non-root, the remainder containing the DFS root.
        int piece_max = split_max[v];
        const int rest = size - 1 - split_sum[v];
        if (rest > 0) piece_max = std::max(piece_max, rest);
        const int other = (comp[v] == max1_id) ? max2 : max1;
        const int largest = std::max({piece_max, other, 1});
        out[v] = MiuzValue{total, largest};
    }
    return out;
}

MetricVector miuz_all(const Graph& g) {
    MetricVector mv{MetricKind::Miuz, std::vector<double>(g.node_count(), kNoScore)};
    const auto exact = miuz_all_exact(g);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.alive(v)) mv.scores[v] = exact[v].value();
    return mv;
}

MetricVector degree_all(const Graph& g) {
    MetricVector mv{MetricKind::Degree, std::vector<double>(g.node_count(), kNoScore)};
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.alive(v)) mv.scores[v] = static_cast<double>(g.degree(v));
    return mv;
}

MetricVector betweenness_all(const Graph& g) {
    const int n = g.node_count();
    MetricVector mv{MetricKind::Betweenness, std::vector<double>(n, kNoScore)};
    for (NodeId v = 0; v < n; ++v)
        if (g.alive(v)) mv.scores[v] = 0.0;

    // Brandes: one BFS + dependency accumulation per source. Workspaces are
    // reset only along the visited order, so each source costs O(comp).
    std::vector<double> sigma(n, 0.0), delta(n, 0.0);
    std::vector<int> dist(n, -1);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<NodeId> order;
    std::vector<NodeId> queue;
    order.reserve(n);
    queue.reserve(n);

    for (NodeId s = 0; s < n; ++s) {
        if (!g.alive(s)) continue;
        order.clear();
        queue.clear();
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            order.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId u : preds[w])
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            if (w != s) mv.scores[w] += delta[w];
        }
        for (NodeId u : order) {
            sigma[u] = 0.0;
            delta[u] = 0.0;
            dist[u] = -1;
            preds[u].clear();
        }
    }
    // Each unordered pair was accumulated from both endpoints.
    for (NodeId v = 0; v < n; ++v)
        if (g.alive(v)) mv.scores[v] *= 0.5;
    return mv;
}

MetricVector harmonic_all(const Graph& g) {
    const int n = g.node_count();
    MetricVector mv{MetricKind::Harmonic, std::vector<double>(n, kNoScore)};

    std::vector<int> dist(n, -1);
    std::vector<NodeId> queue;
    queue.reserve(n);

    for (NodeId s = 0; s < n; ++s) {
        if (!g.alive(s)) continue;
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        std::size_t head = 0;
        double sum = 0.0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            if (u != s) sum += 1.0 / dist[u];
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        mv.scores[s] = sum;
        for (NodeId u : queue) dist[u] = -1;
    }
    return mv;
}

} // namespace miuz
