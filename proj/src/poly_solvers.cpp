// enumerate_pi_01, solve_mixed and solve_alternating: the polynomial cases.
#include <algorithm>
#include <set>
#include <string>

#include "pipart/errors.hpp"
#include "pipart/solve/gf2.hpp"
#include "pipart/solve/solvers.hpp"
#include "pipart/subsets.hpp"

namespace pipart {

PartitionList enumerate_pi_01(const Hypergraph& g, const PiVector& pi) {
    if (pi.k() != g.k()) throw UsageError("pattern does not match hypergraph uniformity");
    if (pi.at(0) != Mark::Zero || pi.at(pi.k()) != Mark::One)
        throw ApplicabilityError("enumerate_pi_01 needs pi_0 = 0 and pi_k = 1");
    // pi_0 = 0 makes V2 independent and pi_k = 1 makes V1 a clique, so every
    // pi-partition appears in the CliqueFirst sparse-dense family.
    PartitionList base = enumerate_sparse_dense(g, Orientation::CliqueFirst);
    PartitionList out;
    for (const Bipartition& p : base)
        if (!check_partition(g, pi, p)) out.push_back(p);
    return out;
}

PartitionList solve_mixed(const Hypergraph& g, const PiVector& pi) {
    if (pi.k() != g.k()) throw UsageError("pattern does not match hypergraph uniformity");
    if (!pi.has_both_zero_and_one())
        throw ApplicabilityError("solve_mixed needs a pattern containing both 0 and 1");

    // Normalize to pi_0 = 0: reverse if the front is Star, complement if it
    // is One. Reversal swaps the sides of every result at the end.
    PiVector work = pi;
    Hypergraph graph = g;
    bool reversed = false;
    if (work.at(0) == Mark::Star) {
        if (work.at(work.k()) == Mark::Star)
            throw ApplicabilityError("solve_mixed cannot normalize a pattern with Star at both ends");
        work = work.reversed();
        reversed = true;
    }
    if (work.at(0) == Mark::One) {
        work = work.complemented();
        graph = complement_hypergraph(graph);
    }

    const int k = work.k();
    int one_at = -1;
    for (int i = k; i >= 1; --i)
        if (work.at(i) == Mark::One) {
            one_at = i;
            break;
        }
    if (one_at < 0) throw InternalError("solve_mixed: normalized pattern lost its One entry");

    const int guess = k - one_at; // size of the guessed subset of V2
    std::set<Bipartition> found;

    // Partitions whose V2 is too small for a guess are swept directly.
    for (int s = 0; s < guess; ++s) {
        for_each_k_subset(graph.n(), s, [&](const std::vector<int>& v2) {
            Bipartition p = Bipartition::from_v1(graph.n(), v2).swapped();
            if (!check_partition(graph, work, p)) found.insert(std::move(p));
            return true;
        });
    }

    // Guess U ⊆ V2 with |U| = k - one_at. Relative to the link at U, V1 must
    // be a clique (pi at one_at is 1) and V2 \ U independent (pi_0 is 0).
    for_each_k_subset(graph.n(), guess, [&](const std::vector<int>& u) {
        SubHypergraph lk = link(graph, u);
        for (const Bipartition& q : enumerate_sparse_dense(lk.graph, Orientation::CliqueFirst)) {
            std::vector<int> v1;
            for (int i = 0; i < q.size(); ++i)
                if (q.in_v1(i)) v1.push_back(lk.to_parent[static_cast<std::size_t>(i)]);
            Bipartition p = Bipartition::from_v1(graph.n(), v1);
            if (!check_partition(graph, work, p)) found.insert(std::move(p));
        }
        return true;
    });

    PartitionList out;
    out.reserve(found.size());
    for (const Bipartition& p : found) out.push_back(reversed ? p.swapped() : p);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Bipartition> solve_alternating(const Hypergraph& g, const PiVector& pi) {
    if (pi.k() != g.k()) throw UsageError("pattern does not match hypergraph uniformity");
    if (!pi.is_alternating())
        throw ApplicabilityError("solve_alternating needs the alternating pattern (0 even, * odd)");
    auto x = gf2_solve(build_incidence_system(g));
    if (!x) return std::nullopt;
    std::vector<Side> side(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        side[static_cast<std::size_t>(v)] = (*x)[static_cast<std::size_t>(v)] ? Side::One : Side::Two;
    Bipartition p{std::move(side)};
    if (check_partition(g, pi, p))
        throw InternalError("solve_alternating produced an invalid partition");
    return p;
}

} // namespace pipart
