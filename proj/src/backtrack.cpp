// Exact DFS with per-edge count propagation for one-free patterns. Only
// edges are constrained there: the final |e ∩ V1| of every edge must be one
// of the pattern's star positions.
#include <string>

#include "pipart/errors.hpp"
#include "pipart/solve/solvers.hpp"

namespace pipart {

namespace {

struct Search {
    const Hypergraph& g;
    const PiVector& pi;
    std::uint64_t allowed = 0; // bit i set when pi_i is Star
    std::vector<std::vector<int>> incident; // vertex -> edge indices
    std::vector<int> cnt1;       // per edge: members placed on side one
    std::vector<int> open;       // per edge: members not yet placed
    std::vector<Side> side;      // 0 = unassigned (stored separately)
    std::vector<std::uint8_t> assigned;
    std::vector<int> trail;      // assignment order, for undo

    explicit Search(const Hypergraph& graph, const PiVector& pattern) : g(graph), pi(pattern) {
        for (int i = 0; i <= pi.k(); ++i)
            if (pi.at(i) == Mark::Star) allowed |= std::uint64_t(1) << i;
        incident.resize(static_cast<std::size_t>(g.n()));
        cnt1.assign(g.edge_count(), 0);
        open.assign(g.edge_count(), g.k());
        side.assign(static_cast<std::size_t>(g.n()), Side::Two);
        assigned.assign(static_cast<std::size_t>(g.n()), 0);
        for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
            for (int v : g.edges()[ei]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(ei));
    }

    bool feasible(int e) const {
        // Reachable final counts form the interval [cnt1, cnt1 + open].
        std::uint64_t reach = ((std::uint64_t(1) << (open[e] + 1)) - 1) << cnt1[e];
        return (reach & allowed) != 0;
    }

    // Applies v := s, then unit-propagates edges left with one open slot.
    // Returns false (leaving the trail for the caller to unwind) on conflict.
    bool assign(int v, Side s) {
        side[static_cast<std::size_t>(v)] = s;
        assigned[static_cast<std::size_t>(v)] = 1;
        trail.push_back(v);
        // Update every counter before any feasibility exit so unwind stays symmetric.
        for (int e : incident[static_cast<std::size_t>(v)]) {
            --open[e];
            if (s == Side::One) ++cnt1[e];
        }
        for (int e : incident[static_cast<std::size_t>(v)])
            if (!feasible(e)) return false;
        for (int e : incident[static_cast<std::size_t>(v)]) {
            if (open[e] != 1) continue;
            bool can_two = (allowed >> cnt1[e]) & 1;
            bool can_one = (allowed >> (cnt1[e] + 1)) & 1;
            if (!can_two && !can_one) return false;
            if (can_two && can_one) continue;
            int w = -1;
            for (int u : g.edges()[static_cast<std::size_t>(e)])
                if (!assigned[static_cast<std::size_t>(u)]) {
                    w = u;
                    break;
                }
            if (w < 0) throw InternalError("backtrack: open edge with no open vertex");
            if (!assign(w, can_one ? Side::One : Side::Two)) return false;
        }
        return true;
    }

    void unwind(std::size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            for (int e : incident[static_cast<std::size_t>(v)]) {
                ++open[e];
                if (side[static_cast<std::size_t>(v)] == Side::One) --cnt1[e];
            }
            assigned[static_cast<std::size_t>(v)] = 0;
        }
    }

    // Emit returns false to stop the whole search.
    template <class Emit>
    bool dfs(int from, Emit&& emit) {
        int v = from;
        while (v < g.n() && assigned[static_cast<std::size_t>(v)]) ++v;
        if (v == g.n()) {
            std::vector<Side> snapshot(side);
            Bipartition p{std::move(snapshot)};
            if (check_partition(g, pi, p))
                throw InternalError("backtrack emitted an invalid partition");
            return emit(std::move(p));
        }
        for (Side s : {Side::One, Side::Two}) {
            std::size_t mark = trail.size();
            if (assign(v, s)) {
                if (!dfs(v + 1, emit)) return false;
            }
            unwind(mark);
        }
        return true;
    }
};

void require_one_free(const Hypergraph& g, const PiVector& pi) {
    if (pi.k() != g.k()) throw UsageError("pattern does not match hypergraph uniformity");
    if (!pi.is_one_free())
        throw ApplicabilityError("backtracking solver handles one-free patterns only");
}

} // namespace

std::optional<Bipartition> backtrack_first(const Hypergraph& g, const PiVector& pi) {
    require_one_free(g, pi);
    Search search(g, pi);
    std::optional<Bipartition> out;
    search.dfs(0, [&](Bipartition p) {
        out = std::move(p);
        return false;
    });
    return out;
}

PartitionList backtrack_all(const Hypergraph& g, const PiVector& pi, std::size_t limit,
                            bool* truncated) {
    require_one_free(g, pi);
    if (truncated) *truncated = false;
    Search search(g, pi);
    PartitionList out;
    search.dfs(0, [&](Bipartition p) {
        if (out.size() == limit) {
            if (truncated) *truncated = true;
            return false;
        }
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

} // namespace pipart
