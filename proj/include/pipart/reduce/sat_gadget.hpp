#ifndef PIPART_REDUCE_SAT_GADGET_HPP
#define PIPART_REDUCE_SAT_GADGET_HPP

#include <vector>

#include "pipart/bipartition.hpp"
#include "pipart/reduce/record.hpp"

namespace pipart {

// 3-SAT -> (0,*,0,0)-partition. Per variable i: copies x_i^1, x_i^2 and
// their negations wired into a 3-uniform 6-cycle plus a forcing gadget on
// u_i^1..u_i^4 whose unique valid split pins u_i^4 to side one; per clause j:
// six w vertices whose closing edge {w^2, w^4, w^6} demands a chosen slot.
// The formula must be preprocessed (no clause of three equal literals);
// 8 vars + 6 clauses vertices, 9 vars + 4 clauses edges.
ReductionRecord reduce_sat(const CnfFormula& preprocessed);

// Convenience over preprocess_cnf's result: trivially true/false formulas
// map to stock yes/no instances (the forcing gadget itself, and the complete
// graph on four vertices, which has no valid split).
ReductionRecord reduce_sat(const PreprocessedCnf& pre);

// Reads a satisfying assignment off a valid partition: x_i is true iff
// x_i^1 lies on side two. Raises ApplicabilityError when p is not a valid
// (0,*,0,0)-partition of the built instance. assignment[i] is variable i+1.
std::vector<bool> pull_back_sat(const ReductionRecord& rec, const Bipartition& p);

} // namespace pipart

#endif
