#ifndef PIPART_CLASSIFY_TABLES_HPP
#define PIPART_CLASSIFY_TABLES_HPP

#include <vector>

#include "pipart/pi_vector.hpp"

namespace pipart {

// The proved classification lists for uniformities 3, 4 and 5. Everything
// else at those lengths is polynomial-time solvable; at length 6 the five
// vectors of open_k5 (and their complement/reversal images) are unresolved.
const std::vector<PiVector>& npc_k3(); // 6 vectors
const std::vector<PiVector>& npc_k4(); // 12 vectors
const std::vector<PiVector>& npc_k5(); // 10 vectors (listed with pi_0 = 0)
const std::vector<PiVector>& open_k5(); // 5 vectors

} // namespace pipart

#endif
