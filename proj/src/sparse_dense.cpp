#include <algorithm>

#include "pipart/solve/solvers.hpp"
#include "pipart/subsets.hpp"

namespace pipart {

namespace {

// Edges grouped by their largest vertex, so extending a prefix by vertex v
// only has to look at edges whose members are all placed.
std::vector<std::vector<const Edge*>> edges_by_max(const Hypergraph& g) {
    std::vector<std::vector<const Edge*>> by_max(static_cast<std::size_t>(g.n()));
    for (const Edge& e : g.edges())
        by_max[static_cast<std::size_t>(e.back())].push_back(&e);
    return by_max;
}

struct State {
    std::vector<Side> side;
    std::vector<int> cliq; // members of the clique side so far
};

bool indep_extend_ok(const std::vector<std::vector<const Edge*>>& by_max, const State& s,
                     int v, Side indep_side) {
    for (const Edge* e : by_max[static_cast<std::size_t>(v)]) {
        bool inside = true;
        for (int w : *e) {
            if (w == v) continue;
            if (s.side[static_cast<std::size_t>(w)] != indep_side) {
                inside = false;
                break;
            }
        }
        if (inside) return false; // edge would sit inside the independent side
    }
    return true;
}

bool cliq_extend_ok(const Hypergraph& g, const State& s, int v) {
    bool ok = true;
    for_each_k_subset_of(s.cliq, g.k() - 1, [&](const std::vector<int>& sub) {
        Edge e(sub);
        e.push_back(v); // v exceeds every placed vertex, so this stays ascending
        if (!g.is_edge_sorted(e)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

} // namespace

std::vector<PartitionList> enumerate_sparse_dense_levels(const Hypergraph& g, Orientation o) {
    const Side indep_side = o == Orientation::IndependentFirst ? Side::One : Side::Two;
    auto by_max = edges_by_max(g);

    std::vector<State> states{State{}};
    std::vector<PartitionList> levels;
    levels.reserve(static_cast<std::size_t>(g.n()) + 1);

    auto snapshot = [&]() {
        PartitionList level;
        level.reserve(states.size());
        for (const State& s : states) level.push_back(Bipartition(s.side));
        levels.push_back(std::move(level));
    };

    snapshot();
    for (int v = 0; v < g.n(); ++v) {
        std::vector<State> next;
        next.reserve(states.size() * 2);
        for (State& s : states) {
            // Side one first keeps the level in lexicographic order.
            for (Side side : {Side::One, Side::Two}) {
                bool to_indep = side == indep_side;
                bool ok = to_indep ? indep_extend_ok(by_max, s, v, indep_side)
                                   : cliq_extend_ok(g, s, v);
                if (!ok) continue;
                State t = s;
                t.side.push_back(side);
                if (!to_indep) t.cliq.push_back(v);
                next.push_back(std::move(t));
            }
        }
        states = std::move(next);
        snapshot();
    }
    return levels;
}

PartitionList enumerate_sparse_dense(const Hypergraph& g, Orientation o) {
    return enumerate_sparse_dense_levels(g, o).back();
}

} // namespace pipart
