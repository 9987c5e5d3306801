#include "miuz/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace miuz {

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::disconnect(NodeId n) {
    if (n < 0 || n >= node_count())
        throw std::invalid_argument("disconnect: node id " + std::to_string(n) + " out of range");
    if (!alive_[n])
        throw std::invalid_argument("disconnect: node " + std::to_string(n) + " already attacked");
    for (NodeId m : adj_[n]) {
        auto& nb = adj_[m];
        nb.erase(std::lower_bound(nb.begin(), nb.end(), n));
    }
    edge_count_ -= static_cast<long long>(adj_[n].size());
    adj_[n].clear();
    adj_[n].shrink_to_fit();
    alive_[n] = 0;
    --alive_count_;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edges, int node_count) {
    if (node_count < 0)
        throw std::invalid_argument("build_graph: negative node count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(node_count), {});
    g.alive_.assign(static_cast<std::size_t>(node_count), 1);
    g.alive_count_ = node_count;
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("build_graph: self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= node_count || v >= node_count)
            throw std::invalid_argument("build_graph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") outside 0.." +
                                        std::to_string(node_count - 1));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.edge_count_ += static_cast<long long>(nb.size());
    }
    g.edge_count_ /= 2;
    return g;
}

ComponentPartition connected_components(const Graph& g, bool restrict_to_alive) {
    const int n = g.node_count();
    ComponentPartition part;
    part.label.assign(n, kNoComponent);

    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (part.label[s] != kNoComponent) continue;
        if (restrict_to_alive && !g.alive(s)) continue;
        const int id = part.count();
        int size = 0;
        part.label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId v : g.neighbors(u)) {
                if (part.label[v] == kNoComponent) {
                    part.label[v] = id;
                    stack.push_back(v);
                }
            }
        }
        part.sizes.push_back(size);
    }
    std::sort(part.sizes.begin(), part.sizes.end(), std::greater<int>());
    return part;
}

std::vector<NodeId> articulation_points(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;

    // Iterative Tarjan; frame = (node, parent, next neighbor index).
    struct Frame {
        NodeId v;
        NodeId parent;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (NodeId root = 0; root < n; ++root) {
        if (!g.alive(root) || disc[root] != -1) continue;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                NodeId w = nb[f.next++];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const NodeId done = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v] = std::min(low[p.v], low[done]);
                    if (p.v != root && low[done] >= disc[p.v]) is_cut[p.v] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }

    std::vector<NodeId> cuts;
    for (NodeId v = 0; v < n; ++v)
        if (is_cut[v]) cuts.push_back(v);
    return cuts;
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
    if (source < 0 || source >= g.node_count())
        throw std::invalid_argument("bfs_distances: source out of range");
    if (!g.alive(source))
        throw std::invalid_argument("bfs_distances: source " + std::to_string(source) + " is dead");
    std::vector<int> dist(g.node_count(), kUnreachable);
    std::queue<NodeId> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

} // namespace miuz
