#ifndef PIPART_CLASSIFY_PI_RULES_HPP
#define PIPART_CLASSIFY_PI_RULES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pipart/pi_vector.hpp"

namespace pipart {

// Pattern-level forms of the hardness-preserving constructions. These are
// shared by the classifier (which chains them) and the reductions module
// (which materializes them on instances).

// sigma stretches a one-free pattern by one position, smearing every Star one
// index to the right: out_0 = pi_0, out_{k+1} = pi_k, out_i = * iff pi_i or
// pi_{i-1} is *. Raises ApplicabilityError when the input contains a One.
PiVector sigma(const PiVector& pi);

// The reduction behind sigma needs no window pi_i = *, pi_{i+1} = 0,
// pi_{i+2} = * (otherwise a mixed apex split could fake validity).
bool sigma_applicable(const PiVector& pi);

// (pi_0, 0, pi_1, 0, ..., 0, pi_k): the doubling target, k' = 2k.
PiVector interleave_with_zeros(const PiVector& pi);

// Branch selection for the prepend-zero reduction on one-free pi:
//   A: (0, pi) equals reverse(pi) followed by 0; one universal vertex.
//   B: no consecutive Stars, pi_k = 0, and some m has pi_m = * with
//      pi_{k-m-1} = 0; anchor-gadget construction.
struct PrependPlan {
    char branch; // 'A' or 'B'
    int m;       // smallest valid m for branch B, -1 for A
};
std::optional<PrependPlan> plan_prepend_zero(const PiVector& pi);

// Checks the subset-sum compatibility between pi, the copy counts j and the
// target pattern: for every I ⊆ {1..k}, pi_out at sum_{m in I} j_m must equal
// pi at |I| (Stars to Stars, Zeros to Zeros). Returns an error message naming
// the violated subset, or nullopt when compatible.
std::optional<std::string> blowup_incompatibility(const PiVector& pi, const std::vector<int>& j,
                                                  const PiVector& pi_out);

} // namespace pipart

#endif
