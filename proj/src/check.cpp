#include "pipart/check.hpp"

#include <string>

#include "pipart/errors.hpp"
#include "pipart/subsets.hpp"

namespace pipart {

std::optional<Violation> check_partition(const Hypergraph& g, const PiVector& pi,
                                         const Bipartition& p) {
    if (pi.k() != g.k())
        throw UsageError("pattern has k=" + std::to_string(pi.k()) + " but hypergraph has k=" +
                         std::to_string(g.k()));
    if (p.size() != g.n())
        throw UsageError("partition has " + std::to_string(p.size()) + " vertices but hypergraph has " +
                         std::to_string(g.n()));

    std::optional<Violation> found;
    if (pi.is_one_free()) {
        // Only edges are constrained; edges() is already in lexicographic order.
        for (const Edge& e : g.edges()) {
            int c = p.count_in_v1(e);
            if (pi.at(c) == Mark::Zero) {
                found = Violation{e, c, ViolationKind::EdgeForbidden};
                break;
            }
        }
        return found;
    }
    for_each_k_subset(g.n(), g.k(), [&](const std::vector<int>& x) {
        int c = p.count_in_v1(x);
        Mark m = pi.at(c);
        if (m == Mark::Zero && g.is_edge_sorted(x)) {
            found = Violation{x, c, ViolationKind::EdgeForbidden};
            return false;
        }
        if (m == Mark::One && !g.is_edge_sorted(x)) {
            found = Violation{x, c, ViolationKind::NonEdgeRequired};
            return false;
        }
        return true;
    });
    return found;
}

} // namespace pipart
