#ifndef PIPART_CLASSIFY_CLASSIFY_HPP
#define PIPART_CLASSIFY_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pipart/pi_vector.hpp"

namespace pipart {

enum class Complexity { Polynomial, NPComplete, Open };

std::string complexity_name(Complexity c);

// One replayable step. For NP-complete verdicts the chain starts at a base
// vector and ends at the queried one; for the others the steps record the
// normalization applied plus the rule that discharged the query.
struct DerivationStep {
    std::string rule;
    PiVector from;
    PiVector to;
};

struct ComplexityVerdict {
    Complexity status = Complexity::Open;
    std::vector<DerivationStep> derivation;
};

struct NormalizationLog {
    bool complemented = false; // applied when the non-Star entries are all One
    bool reversed = false;     // applied when the reversal is lexicographically smaller
    PiVector result;
};

NormalizationLog normalize(const PiVector& pi);

// Verdict with a derivation trail. Priority order: k <= 2; Star at an end;
// both 0 and 1 present; normalize; all-zero; alternating; the proved tables
// for k = 3, 4, 5 (the five unresolved length-6 vectors report Open); and for
// k >= 6 a bounded breadth-first search expressing the query as the image of
// a base hard vector under the closure rules (sigma, doubling, prepend- and
// append-zero, reversal). The closure engine also runs beside the tables as
// a cross-check and must never contradict them.
ComplexityVerdict classify(const PiVector& pi, int search_depth = 6);

// Forward application of a recorded rule; throws ApplicabilityError when the
// rule's side conditions fail, so recorded derivations can be replayed and
// audited mechanically.
PiVector apply_rule(const std::string& rule, const PiVector& from);

// Searches for a closure chain proving the (normalized, one-free, zero-ended)
// target NP-complete. Exposed for the table cross-check tests.
std::optional<std::vector<DerivationStep>> derive_npc_chain(const PiVector& target, int depth);

// Line-oriented report: "verdict <status>" then one "step <rule> <from> -> <to>" per step.
std::string verdict_report(const ComplexityVerdict& v);

} // namespace pipart

#endif
