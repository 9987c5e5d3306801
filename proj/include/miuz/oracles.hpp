#ifndef MIUZ_ORACLES_HPP
#define MIUZ_ORACLES_HPP

#include "miuz/graph.hpp"
#include "miuz/metrics.hpp"

namespace miuz {

// Slow reference implementations, independent of the production code paths:
// Miuz by a literal union-find census, betweenness by per-pair shortest-path
// counting over all-pairs BFS layers. Intended for graphs up to ~64 nodes.

double miuz_bruteforce(const Graph& g, NodeId n);
MiuzValue miuz_bruteforce_exact(const Graph& g, NodeId n);

MetricVector betweenness_bruteforce(const Graph& g);

} // namespace miuz

#endif // MIUZ_ORACLES_HPP
