#ifndef PIPART_CHECK_HPP
#define PIPART_CHECK_HPP

#include <optional>
#include <vector>

#include "pipart/bipartition.hpp"
#include "pipart/hypergraph.hpp"
#include "pipart/pi_vector.hpp"

namespace pipart {

enum class ViolationKind {
    EdgeForbidden,   // pi at the count is 0 but the witness is an edge
    NonEdgeRequired, // pi at the count is 1 but the witness is not an edge
};

struct Violation {
    std::vector<int> witness; // k-subset, ascending
    int count_in_v1;
    ViolationKind kind;
};

// Checks whether p is a pi-partition of g: every k-subset X must be an edge
// when pi[|X ∩ V1|] is 1 and a non-edge when it is 0. Returns nullopt when
// valid, otherwise the lexicographically smallest violating k-subset.
// For one-free pi only edges can violate, so only edges are scanned.
std::optional<Violation> check_partition(const Hypergraph& g, const PiVector& pi,
                                         const Bipartition& p);

} // namespace pipart

#endif
