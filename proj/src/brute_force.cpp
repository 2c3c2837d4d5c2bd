#include <cstdint>
#include <string>

#include "pipart/errors.hpp"
#include "pipart/solve/solvers.hpp"
#include "pipart/subsets.hpp"

namespace pipart {

namespace {

struct SubsetTable {
    std::vector<std::uint32_t> mask;
    std::vector<std::uint8_t> edge;
};

SubsetTable build_subsets(const Hypergraph& g) {
    SubsetTable t;
    for_each_k_subset(g.n(), g.k(), [&](const std::vector<int>& x) {
        std::uint32_t m = 0;
        for (int v : x) m |= std::uint32_t(1) << v;
        t.mask.push_back(m);
        t.edge.push_back(g.is_edge_sorted(x) ? 1 : 0);
        return true;
    });
    return t;
}

// Assignment counters run in lexicographic order of the "12" string: bit
// (n-1-i) of the counter sends vertex i to side two.
Bipartition counter_to_partition(std::uint64_t c, int n) {
    std::vector<Side> side(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        side[static_cast<std::size_t>(i)] =
            (c >> (n - 1 - i)) & 1 ? Side::Two : Side::One;
    return Bipartition(std::move(side));
}

std::uint32_t v1_mask(const Bipartition& p) {
    std::uint32_t m = 0;
    for (int v = 0; v < p.size(); ++v)
        if (p.in_v1(v)) m |= std::uint32_t(1) << v;
    return m;
}

template <class Emit>
void scan(const Hypergraph& g, const PiVector& pi, int max_n, Emit&& emit) {
    if (pi.k() != g.k())
        throw UsageError("pattern k=" + std::to_string(pi.k()) + " does not match hypergraph k=" +
                         std::to_string(g.k()));
    if (g.n() > max_n || g.n() > 32)
        throw ResourceError("brute force capped at n=" + std::to_string(std::min(max_n, 32)) +
                            ", instance has n=" + std::to_string(g.n()));
    SubsetTable t = build_subsets(g);
    const std::uint64_t total = std::uint64_t(1) << g.n();
    for (std::uint64_t c = 0; c < total; ++c) {
        Bipartition p = counter_to_partition(c, g.n());
        std::uint32_t m = v1_mask(p);
        bool ok = true;
        for (std::size_t s = 0; s < t.mask.size(); ++s) {
            Mark mark = pi.at(__builtin_popcount(m & t.mask[s]));
            if (mark == Mark::Star) continue;
            if ((mark == Mark::One) != (t.edge[s] != 0)) {
                ok = false;
                break;
            }
        }
        if (ok && !emit(std::move(p))) return;
    }
}

} // namespace

PartitionList brute_force_all(const Hypergraph& g, const PiVector& pi, int max_n) {
    PartitionList out;
    scan(g, pi, max_n, [&](Bipartition p) {
        out.push_back(std::move(p));
        return true;
    });
    return out; // counter order is lexicographic already
}

std::optional<Bipartition> brute_force_first(const Hypergraph& g, const PiVector& pi, int max_n) {
    std::optional<Bipartition> out;
    scan(g, pi, max_n, [&](Bipartition p) {
        out = std::move(p);
        return false;
    });
    return out;
}

} // namespace pipart
