#ifndef PIPART_GENERATE_HPP
#define PIPART_GENERATE_HPP

#include <cstdint>

#include "pipart/hypergraph.hpp"

namespace pipart {

// k-uniform m-cycle: vertices Z_m, one edge {i, i+1, ..., i+k-1} mod m per
// residue i (deduplicated; exactly m edges when m > k). Requires m >= k.
Hypergraph make_cycle(int m, int k);

Hypergraph make_complete(int n, int k);
Hypergraph make_empty(int n, int k);

// Each k-subset included independently with probability p; deterministic for
// a given seed. Requires p in [0, 1].
Hypergraph make_random(int n, int k, double p, std::uint64_t seed);

} // namespace pipart

#endif
