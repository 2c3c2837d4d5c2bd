#ifndef PIPART_SOLVE_SOLVERS_HPP
#define PIPART_SOLVE_SOLVERS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "pipart/bipartition.hpp"
#include "pipart/check.hpp"
#include "pipart/hypergraph.hpp"
#include "pipart/pi_vector.hpp"

namespace pipart {

// ---- exhaustive oracle ------------------------------------------------

// Exact answers by exhausting all 2^n assignments. Ground truth for every
// property suite. Raises ResourceError when n exceeds the cap.
PartitionList brute_force_all(const Hypergraph& g, const PiVector& pi, int max_n = 24);
std::optional<Bipartition> brute_force_first(const Hypergraph& g, const PiVector& pi, int max_n = 24);

// ---- sparse-dense enumeration ----------------------------------------

enum class Orientation {
    IndependentFirst, // V1 independent, V2 a clique
    CliqueFirst,      // V1 a clique, V2 independent
};

// All partitions with one side independent and the other a clique, found by
// level-wise prefix search: the feasible assignments of {0..i-1} are exactly
// the sparse-dense partitions of the induced prefix graph (the property is
// hereditary), so each level stays polynomial in size. Output sorted.
PartitionList enumerate_sparse_dense(const Hypergraph& g, Orientation o);

// Level i holds the feasible states over the prefix {0..i-1}; the last level
// is enumerate_sparse_dense's answer.
std::vector<PartitionList> enumerate_sparse_dense_levels(const Hypergraph& g, Orientation o);

// ---- polynomial pattern solvers ---------------------------------------

// All pi-partitions for pi with pi_0 = 0 and pi_k = 1: such a partition has
// V1 a clique and V2 independent, so filter the sparse-dense family.
PartitionList enumerate_pi_01(const Hypergraph& g, const PiVector& pi);

// All pi-partitions for pi containing both 0 and 1. Normalizes so pi_0 = 0
// (complementing or reversing as needed; raises ApplicabilityError when both
// ends are Star), picks i with pi_i = 1, then guesses the (k-i)-subset U of
// V2, enumerates (clique, independent) partitions of the link at U and
// checks the candidates; partitions whose V2 is smaller than k-i are swept
// directly.
PartitionList solve_mixed(const Hypergraph& g, const PiVector& pi);

// For the alternating pattern (0 at even, * at odd indices): a partition is
// valid iff every edge meets V1 an odd number of times, i.e. Mx = 1 over
// GF(2). Returns a partition (free variables on side two) or nullopt.
std::optional<Bipartition> solve_alternating(const Hypergraph& g, const PiVector& pi);

// ---- exact backtracking for one-free patterns --------------------------

// DFS over vertices in order (side one tried first, so the first solution is
// the lexicographically least) with per-edge count propagation: an edge's
// final |e ∩ V1| must land in the pattern's star set. Exact but exponential
// in the worst case. Requires a one-free pattern.
std::optional<Bipartition> backtrack_first(const Hypergraph& g, const PiVector& pi);
PartitionList backtrack_all(const Hypergraph& g, const PiVector& pi,
                            std::size_t limit = static_cast<std::size_t>(-1),
                            bool* truncated = nullptr);

// ---- dispatcher --------------------------------------------------------

enum class Method { Trivial, AllZero, Mixed, Alternating, Fallback };

std::string method_name(Method m);

struct Answer {
    bool yes = false;
    std::optional<Bipartition> partition; // present iff yes
    Method method = Method::Fallback;
};

// Routes by pattern shape: Star at an end -> trivial one-sided partition;
// all-zero -> yes iff there are no edges; both 0 and 1 -> solve_mixed;
// alternating (zero-free patterns are complemented first) -> GF(2);
// otherwise exact backtracking. Every returned partition is re-checked.
Answer solve(const Hypergraph& g, const PiVector& pi);

// Full solution list for any pattern: solve_mixed where it applies, the
// exact backtracking enumerator for (possibly complemented) one-free
// patterns, and the brute-force oracle for the remaining corner (both ends
// Star with 0 and 1 present), which is capped at brute_cap vertices.
PartitionList solve_all(const Hypergraph& g, const PiVector& pi,
                        std::size_t limit = static_cast<std::size_t>(-1),
                        bool* truncated = nullptr, int brute_cap = 24);

} // namespace pipart

#endif
