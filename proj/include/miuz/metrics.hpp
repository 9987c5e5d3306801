#ifndef MIUZ_METRICS_HPP
#define MIUZ_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "miuz/graph.hpp"

namespace miuz {

enum class MetricKind {
    Miuz,
    Degree,
    Betweenness,
    Harmonic,
    Random,
};

std::string to_string(MetricKind kind);
MetricKind parse_metric_kind(const std::string& name);

/// Miuz score as an exact ratio: value = total/largest - 1, where `total`
/// counts the alive nodes (the stripped node included as a singleton) and
/// `largest` is the biggest component size in the stripped census. Defined
/// zeros (isolated node, or the census count rising by exactly one) are
/// stored as {1, 1}. Exact comparison avoids float ties perturbing attack
/// order.
struct MiuzValue {
    std::int64_t total = 1;
    std::int64_t largest = 1;

    double value() const {
        return static_cast<double>(total - largest) / static_cast<double>(largest);
    }
    bool positive() const { return total > largest; }
};

// (a/b vs c/d) with positive denominators, via cross multiplication.
inline bool operator<(const MiuzValue& x, const MiuzValue& y) {
    return (x.total - x.largest) * y.largest < (y.total - y.largest) * x.largest;
}
inline bool operator==(const MiuzValue& x, const MiuzValue& y) {
    return (x.total - x.largest) * y.largest == (y.total - y.largest) * x.largest;
}

/// Per-node scores for one metric. Dead nodes carry kNoScore (NaN).
struct MetricVector {
    MetricKind kind = MetricKind::Degree;
    std::vector<double> scores;

    bool has_score(NodeId n) const;
};

/// NaN sentinel for nodes without a score.
extern const double kNoScore;

/// Miuz index of one alive node: strip n's edges, census the alive nodes
/// with n kept as a singleton, and compare total size against the largest
/// component. Non-destructive. Throws if n is dead.
double miuz_single(const Graph& g, NodeId n);
MiuzValue miuz_single_exact(const Graph& g, NodeId n);

/// Miuz for every alive node in one block-cut DFS pass (subtree sizes at
/// articulation points give all split-component sizes). Matches the
/// per-node definition exactly.
std::vector<MiuzValue> miuz_all_exact(const Graph& g);
MetricVector miuz_all(const Graph& g);

/// Alive-neighbor counts.
MetricVector degree_all(const Graph& g);

/// Unnormalized betweenness over unordered alive pairs, by the standard
/// single-source accumulation algorithm run from every alive source.
MetricVector betweenness_all(const Graph& g);

/// Sum of reciprocal hop distances to every other alive node, 1/inf = 0.
MetricVector harmonic_all(const Graph& g);

} // namespace miuz

#endif // MIUZ_METRICS_HPP
