#ifndef MIUZ_GRAPH_HPP
#define MIUZ_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace miuz {

using NodeId = int;

/// Distance marker for nodes unreachable from the BFS source.
inline constexpr int kUnreachable = -1;

/// Component label carried by nodes excluded from a census (dead nodes).
inline constexpr int kNoComponent = -1;

/// Undirected simple graph over dense 0-based node ids.
///
/// Nodes can be disconnected (all incident edges dropped, node marked dead)
/// but never re-inserted. Adjacency lists are kept sorted and symmetric;
/// self-loops and parallel edges are rejected/collapsed at build time.
class Graph {
public:
    Graph() = default;

    int node_count() const { return static_cast<int>(adj_.size()); }
    int alive_count() const { return alive_count_; }
    long long edge_count() const { return edge_count_; }

    bool alive(NodeId n) const { return alive_[n] != 0; }
    int degree(NodeId n) const { return static_cast<int>(adj_[n].size()); }
    const std::vector<NodeId>& neighbors(NodeId n) const { return adj_[n]; }
    bool has_edge(NodeId u, NodeId v) const;

    /// Removes every edge incident to n and marks n dead. Dead nodes are
    /// excluded from alive-only censuses and from attack candidate sets.
    /// Throws std::invalid_argument if n is already dead.
    void disconnect(NodeId n);

    /// All edges as (u, v) pairs with u < v, sorted. Dead nodes have none.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    friend Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edges,
                             int node_count);

    std::vector<std::vector<NodeId>> adj_;
    std::vector<char> alive_;
    int alive_count_ = 0;
    long long edge_count_ = 0;
};

/// Builds a graph from an edge list. Duplicate edges (either orientation)
/// collapse silently; self-loops and out-of-range ids throw
/// std::invalid_argument naming the offending pair.
Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edges,
                  int node_count);

/// Connected-component census. When restrict_to_alive is true, dead nodes
/// get label kNoComponent and do not count; otherwise every node takes part
/// (dead nodes are edge-less singletons). Isolated nodes are singleton
/// components. Component sizes are reported in descending order.
struct ComponentPartition {
    std::vector<int> label;
    std::vector<int> sizes;

    int count() const { return static_cast<int>(sizes.size()); }
    int largest() const { return sizes.empty() ? 0 : sizes.front(); }
};

ComponentPartition connected_components(const Graph& g, bool restrict_to_alive = true);

/// Articulation points of the alive subgraph: alive nodes whose removal
/// increases the component count among the remaining alive nodes.
/// Iterative DFS low-link; O(V + E).
std::vector<NodeId> articulation_points(const Graph& g);

/// Unweighted shortest-path hop counts from source over the alive subgraph;
/// unreachable nodes (and dead ones) get kUnreachable. Throws if source is dead.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

} // namespace miuz

#endif // MIUZ_GRAPH_HPP
