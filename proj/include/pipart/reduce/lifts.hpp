#ifndef PIPART_REDUCE_LIFTS_HPP
#define PIPART_REDUCE_LIFTS_HPP

#include <vector>

#include "pipart/bipartition.hpp"
#include "pipart/reduce/record.hpp"

namespace pipart {

// The instance-level lift reductions. All of them require a one-free pattern
// with Zero at both ends containing at least one Star (the setting the
// hardness chains run in; outside it the equivalences genuinely fail).

// k -> k+1: attach apexes u_1..u_{k+1}, each input edge extended by every
// single apex, plus the all-apex edge. Output pattern sigma(pi); needs the
// sigma window condition.
ReductionRecord sigma_lift(const Hypergraph& g, const PiVector& pi);

// General copy blow-up: vertex u becomes copies u^1..u^{k'} tied together by
// k'-1 anchors; edge {v_1 < ... < v_k} becomes the first j_m copies of each
// v_m. pi_out must have no consecutive Stars and satisfy the subset-sum
// compatibility with (pi, j).
ReductionRecord blowup(const Hypergraph& g, const PiVector& pi, const std::vector<int>& copies,
                       const PiVector& pi_out);

// Doubling: blowup with every j_m = 2 onto (pi_0, 0, pi_1, 0, ..., 0, pi_k).
ReductionRecord double_up(const Hypergraph& g, const PiVector& pi);

// pi -> (0, pi). Branch A (palindromic (0,pi)): one universal vertex joined
// to every edge. Branch B: anchor gadget on u_1..u_{2k}, w_1..w_{k+1} with
// edges chosen by the split position m.
ReductionRecord prepend_zero(const Hypergraph& g, const PiVector& pi);

// Decodes a valid partition of rec.output into a partition of the input:
// sigma lift and prepend-B restrict to the original vertices, blow-up reads
// each vertex off its first copy, prepend-A drops the universal vertex and
// swaps sides when it sat on side two.
Bipartition pull_back(const ReductionRecord& rec, const Bipartition& p);

} // namespace pipart

#endif
