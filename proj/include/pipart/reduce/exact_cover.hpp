#ifndef PIPART_REDUCE_EXACT_COVER_HPP
#define PIPART_REDUCE_EXACT_COVER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pipart/hypergraph.hpp"

namespace pipart {

// An exact cover instance: pick a subfamily covering each element exactly
// once. sets is an indexed family; duplicates and empty sets are meaningful
// (the correspondence below needs them).
struct ExactCoverInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;

    bool operator==(const ExactCoverInstance& o) const {
        return universe_size == o.universe_size && sets == o.sets;
    }
};

// X = E(G), one set per vertex holding its incident edges (3-uniform input
// only, so every element lands in exactly 3 sets). Choosing a subfamily that
// covers every edge exactly once is the same as choosing V1 for a
// (0,*,0,0)-partition.
ExactCoverInstance to_exact_cover(const Hypergraph& g);

// Inverse construction: one vertex per set, one edge per element (the 3 sets
// containing it). Every element must lie in exactly 3 sets.
Hypergraph from_exact_cover(const ExactCoverInstance& inst);

// Number of exact covers, by exhaustive search over subfamilies.
std::uint64_t count_exact_covers(const ExactCoverInstance& inst);

// Format: "p xc <|X|> <|S|>" then one line per set of 0-based element
// indices; an empty line is an empty set. '#' comments allowed before sets.
ExactCoverInstance parse_exact_cover(std::string_view text);
std::string serialize_exact_cover(const ExactCoverInstance& inst);

} // namespace pipart

#endif
