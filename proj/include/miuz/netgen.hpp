#ifndef MIUZ_NETGEN_HPP
#define MIUZ_NETGEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "miuz/graph.hpp"

namespace miuz {

/// Scale-free generation parameters: degrees follow P(k) proportional to
/// k^-alpha on [k_min, k_max].
struct GenSpec {
    int n = 0;
    double alpha = 0.0;
    int k_min = 2;
    int k_max = 0; // 0 = structural cutoff floor(sqrt(n))
    std::uint64_t seed = 0;

    int effective_k_max() const;
    void validate() const; // throws std::invalid_argument on a bad spec
};

/// Exact truncated power-law pmf P(k) for k in [k_min, k_max], normalized by
/// direct summation. Index 0 corresponds to k_min.
std::vector<double> power_law_pmf(double alpha, int k_min, int k_max);

/// n independent inverse-CDF draws from the truncated power law. If the sum
/// is odd, the degree of one uniformly chosen node is incremented (skipping
/// nodes already at k_max).
std::vector<int> sample_degree_sequence(const GenSpec& spec, std::mt19937_64& rng);

/// Uniform stub matching over the degree sequence; self-loops and parallel
/// edges are erased afterwards, so realized degrees can fall slightly below
/// the requested ones. Requires an even degree sum.
Graph configuration_model(const std::vector<int>& degrees, std::mt19937_64& rng);

/// sample_degree_sequence + configuration_model with an rng derived from
/// spec.seed. Same spec, same graph.
Graph generate(const GenSpec& spec);

} // namespace miuz

#endif // MIUZ_NETGEN_HPP
