#include "pipart/generate.hpp"

#include <random>

#include "pipart/errors.hpp"
#include "pipart/subsets.hpp"

namespace pipart {

Hypergraph make_cycle(int m, int k) {
    if (m < k) throw UsageError("cycle needs m >= k");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Edge e;
        e.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) e.push_back((i + j) % m);
        edges.push_back(std::move(e));
    }
    return Hypergraph(m, k, std::move(edges)); // constructor dedups (m == k collapses)
}

Hypergraph make_complete(int n, int k) {
    std::vector<Edge> edges;
    for_each_k_subset(n, k, [&](const std::vector<int>& x) {
        edges.push_back(x);
        return true;
    });
    return Hypergraph(n, k, std::move(edges));
}

Hypergraph make_empty(int n, int k) { return Hypergraph(n, k); }

Hypergraph make_random(int n, int k, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw UsageError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    // Portable Bernoulli draw: compare a raw 64-bit word against p * 2^64.
    const long double threshold = static_cast<long double>(p) * 18446744073709551616.0L;
    std::vector<Edge> edges;
    for_each_k_subset(n, k, [&](const std::vector<int>& x) {
        if (static_cast<long double>(rng()) < threshold) edges.push_back(x);
        return true;
    });
    return Hypergraph(n, k, std::move(edges));
}

} // namespace pipart
