#ifndef PIPART_SOLVE_GF2_HPP
#define PIPART_SOLVE_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pipart/hypergraph.hpp"

namespace pipart {

// The system Mx = 1 over GF(2): one bit-row per edge (in lexicographic edge
// order, support exactly that edge), all right-hand sides 1.
struct LinearSystem {
    int cols = 0;
    std::vector<std::vector<std::uint64_t>> rows; // (cols+63)/64 words each
    std::vector<std::uint8_t> rhs;                // one bit per row, all 1 when built from a graph

    bool get(std::size_t row, int col) const {
        return (rows[row][static_cast<std::size_t>(col) >> 6] >> (col & 63)) & 1u;
    }
};

LinearSystem build_incidence_system(const Hypergraph& g);

// Gaussian elimination; returns a solution with free variables set to 0, or
// nullopt when inconsistent.
std::optional<std::vector<std::uint8_t>> gf2_solve(LinearSystem system);

} // namespace pipart

#endif
