#include "miuz/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace miuz {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of the alive subgraph with all edges incident to `skip`
// dropped (skip < 0 drops nothing). Returns the component count over alive
// nodes and the largest size.
void census(const Graph& g, NodeId skip, int& count, int& largest) {
    const int n = g.node_count();
    UnionFind uf(n);
    for (NodeId u = 0; u < n; ++u) {
        if (u == skip) continue;
        for (NodeId v : g.neighbors(u))
            if (u < v && v != skip) uf.unite(u, v);
    }
    std::vector<int> size(n, 0);
    count = 0;
    largest = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (!g.alive(u)) continue;
        int r = uf.find(u);
        if (size[r] == 0) ++count;
        ++size[r];
        largest = std::max(largest, size[r]);
    }
}

} // namespace

MiuzValue miuz_bruteforce_exact(const Graph& g, NodeId n) {
    if (n < 0 || n >= g.node_count() || !g.alive(n))
        throw std::invalid_argument("miuz_bruteforce: node is not alive");
    if (g.degree(n) == 0) return {};
    int count_before = 0, largest_before = 0;
    census(g, -1, count_before, largest_before);
    int count_after = 0, largest_after = 0;
    census(g, n, count_after, largest_after);
    if (count_after == count_before + 1) return {};
    return MiuzValue{g.alive_count(), largest_after};
}

double miuz_bruteforce(const Graph& g, NodeId n) {
    return miuz_bruteforce_exact(g, n).value();
}

MetricVector betweenness_bruteforce(const Graph& g) {
    const int n = g.node_count();
    MetricVector mv{MetricKind::Betweenness, std::vector<double>(n, kNoScore)};
    for (NodeId v = 0; v < n; ++v)
        if (g.alive(v)) mv.scores[v] = 0.0;

    // All-pairs hop distances and shortest-path counts, one plain BFS per
    // source (no dependency accumulation anywhere).
    std::vector<std::vector<int>> dist(n);
    std::vector<std::vector<double>> paths(n);
    for (NodeId s = 0; s < n; ++s) {
        dist[s].assign(n, -1);
        paths[s].assign(n, 0.0);
        if (!g.alive(s)) continue;
        dist[s][s] = 0;
        paths[s][s] = 1.0;
        std::vector<NodeId> queue{s};
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            for (NodeId v : g.neighbors(u)) {
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    queue.push_back(v);
                }
                if (dist[s][v] == dist[s][u] + 1) paths[s][v] += paths[s][u];
            }
        }
    }

    for (NodeId s = 0; s < n; ++s) {
        if (!g.alive(s)) continue;
        for (NodeId t = s + 1; t < n; ++t) {
            if (!g.alive(t) || dist[s][t] < 0) continue;
            for (NodeId v = 0; v < n; ++v) {
                if (v == s || v == t || !g.alive(v)) continue;
                if (dist[s][v] < 0 || dist[t][v] < 0) continue;
                if (dist[s][v] + dist[t][v] != dist[s][t]) continue;
                mv.scores[v] += paths[s][v] * paths[t][v] / paths[s][t];
            }
        }
    }
    return mv;
}

} // namespace miuz
