#include <string>

#include "pipart/errors.hpp"
#include "pipart/solve/solvers.hpp"

namespace pipart {

std::string method_name(Method m) {
    switch (m) {
    case Method::Trivial: return "trivial";
    case Method::AllZero: return "all-zero";
    case Method::Mixed: return "mixed";
    case Method::Alternating: return "alternating";
    case Method::Fallback: return "fallback";
    }
    return "?";
}

namespace {

Answer checked(const Hypergraph& g, const PiVector& pi, Answer a) {
    if (a.yes) {
        if (!a.partition) throw InternalError("solve: yes answer without a partition");
        if (check_partition(g, pi, *a.partition))
            throw InternalError("solve: returned partition fails its own check");
    }
    return a;
}

} // namespace

Answer solve(const Hypergraph& g, const PiVector& pi) {
    if (pi.k() != g.k()) throw UsageError("pattern does not match hypergraph uniformity");

    // Star at an end: a one-sided partition puts every k-subset at that end.
    if (pi.at(0) == Mark::Star)
        return checked(g, pi, {true, Bipartition::uniform(g.n(), Side::Two), Method::Trivial});
    if (pi.at(pi.k()) == Mark::Star)
        return checked(g, pi, {true, Bipartition::uniform(g.n(), Side::One), Method::Trivial});

    if (pi.has_both_zero_and_one()) {
        PartitionList all = solve_mixed(g, pi);
        if (all.empty()) return {false, std::nullopt, Method::Mixed};
        return checked(g, pi, {true, all.front(), Method::Mixed});
    }

    // Now one of the values is absent; complement a zero-free pattern so the
    // rest of the pipeline sees a one-free one. Partitions carry over as-is.
    PiVector work = pi;
    Hypergraph graph = g;
    if (!work.is_one_free()) {
        work = work.complemented();
        graph = complement_hypergraph(graph);
    }

    if (work.is_all_zero()) {
        // Constant pattern: every k-subset must be a non-edge, whatever the
        // partition; any partition witnesses a yes on an edgeless graph.
        if (graph.edge_count() != 0) return {false, std::nullopt, Method::AllZero};
        return checked(g, pi, {true, Bipartition::uniform(g.n(), Side::Two), Method::AllZero});
    }

    if (work.is_alternating()) {
        auto p = solve_alternating(graph, work);
        if (!p) return {false, std::nullopt, Method::Alternating};
        return checked(g, pi, {true, *p, Method::Alternating});
    }

    auto p = backtrack_first(graph, work);
    if (!p) return {false, std::nullopt, Method::Fallback};
    return checked(g, pi, {true, *p, Method::Fallback});
}

PartitionList solve_all(const Hypergraph& g, const PiVector& pi, std::size_t limit,
                        bool* truncated, int brute_cap) {
    if (pi.k() != g.k()) throw UsageError("pattern does not match hypergraph uniformity");
    if (truncated) *truncated = false;

    if (pi.has_both_zero_and_one()) {
        if (pi.at(0) == Mark::Star && pi.at(pi.k()) == Mark::Star) {
            // Outside every polynomial family; fall back to the oracle.
            PartitionList all = brute_force_all(g, pi, brute_cap);
            if (all.size() > limit) {
                all.resize(limit);
                if (truncated) *truncated = true;
            }
            return all;
        }
        PartitionList all = solve_mixed(g, pi);
        if (all.size() > limit) {
            all.resize(limit);
            if (truncated) *truncated = true;
        }
        return all;
    }

    PiVector work = pi;
    Hypergraph graph = g;
    if (!work.is_one_free()) {
        work = work.complemented();
        graph = complement_hypergraph(graph);
    }
    return backtrack_all(graph, work, limit, truncated);
}

} // namespace pipart
