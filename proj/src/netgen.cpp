#include "miuz/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "miuz/rng.hpp"

namespace miuz {

int GenSpec::effective_k_max() const {
    if (k_max > 0) return k_max;
    return static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
}

void GenSpec::validate() const {
    if (n < 2) throw std::invalid_argument("gen spec: n must be at least 2");
    if (!(alpha > 1.0)) throw std::invalid_argument("gen spec: alpha must exceed 1");
    if (k_min < 1) throw std::invalid_argument("gen spec: k_min must be at least 1");
    const int kmax = effective_k_max();
    if (k_min > kmax)
        throw std::invalid_argument("gen spec: k_min " + std::to_string(k_min) +
                                    " exceeds k_max " + std::to_string(kmax));
    if (kmax > n - 1)
        throw std::invalid_argument("gen spec: k_max " + std::to_string(kmax) +
                                    " exceeds n-1");
}

std::vector<double> power_law_pmf(double alpha, int k_min, int k_max) {
    if (k_min < 1 || k_min > k_max)
        throw std::invalid_argument("power_law_pmf: bad support");
    std::vector<double> pmf(static_cast<std::size_t>(k_max - k_min + 1));
    double norm = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        pmf[k - k_min] = std::pow(static_cast<double>(k), -alpha);
        norm += pmf[k - k_min];
    }
    if (!(norm > 0.0))
        throw std::runtime_error("power_law_pmf: weights underflowed to zero");
    for (double& p : pmf) p /= norm;
    return pmf;
}

std::vector<int> sample_degree_sequence(const GenSpec& spec, std::mt19937_64& rng) {
    spec.validate();
    const int k_min = spec.k_min;
    const int k_max = spec.effective_k_max();

    const auto pmf = power_law_pmf(spec.alpha, k_min, k_max);
    std::vector<double> cdf(pmf.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        acc += pmf[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    std::vector<int> degrees(spec.n);
    long long sum = 0;
    for (int i = 0; i < spec.n; ++i) {
        const double u = next_unit(rng);
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u,
                                         [](double c, double x) { return c <= x; });
        degrees[i] = k_min + static_cast<int>(it - cdf.begin());
        sum += degrees[i];
    }

    if (sum % 2 != 0) {
        const bool fixable =
            std::any_of(degrees.begin(), degrees.end(), [&](int d) { return d < k_max; });
        if (!fixable)
            throw std::runtime_error("degree sequence: odd sum with every degree at k_max");
        for (;;) {
            const auto i = static_cast<std::size_t>(
                next_bounded(rng, static_cast<std::uint64_t>(spec.n)));
            if (degrees[i] < k_max) {
                ++degrees[i];
                break;
            }
        }
    }
    return degrees;
}

Graph configuration_model(const std::vector<int>& degrees, std::mt19937_64& rng) {
    const int n = static_cast<int>(degrees.size());
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        if (degrees[i] < 0 || degrees[i] > n - 1)
            throw std::invalid_argument("configuration_model: degree " +
                                        std::to_string(degrees[i]) + " out of 0..n-1");
        sum += degrees[i];
    }
    if (sum % 2 != 0)
        throw std::invalid_argument("configuration_model: odd degree sum");

    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(sum));
    for (NodeId v = 0; v < n; ++v)
        stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[v]), v);
    shuffle_in_place(stubs, rng);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        if (stubs[i] == stubs[i + 1]) continue; // erase self-loop
        edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    // build_graph collapses the parallel edges left by the matching.
    return build_graph(edges, n);
}

Graph generate(const GenSpec& spec) {
    spec.validate();
    auto rng = make_rng(spec.seed);
    const auto degrees = sample_degree_sequence(spec, rng);
    return configuration_model(degrees, rng);
}

} // namespace miuz
