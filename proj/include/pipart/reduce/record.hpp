#ifndef PIPART_REDUCE_RECORD_HPP
#define PIPART_REDUCE_RECORD_HPP

#include <string>
#include <vector>

#include "pipart/hypergraph.hpp"
#include "pipart/pi_vector.hpp"
#include "pipart/reduce/cnf.hpp"

namespace pipart {

enum class ReductionKind { Sat3, SigmaLift, Blowup, PrependZero };

std::string reduction_kind_name(ReductionKind k);

// A built instance plus everything needed to pull a solution of the output
// back to a solution of the input. roles[v] tags every output vertex, e.g.
// "orig:3", "x:2:1", "apex:4", "copy:0:2", "anchor:1:3".
struct ReductionRecord {
    ReductionKind kind = ReductionKind::Sat3;
    Hypergraph output{0, 1};
    PiVector output_pi{{Mark::Zero, Mark::Zero}};
    std::vector<std::string> roles;

    // Input description (by kind):
    PiVector input_pi{{Mark::Zero, Mark::Zero}}; // lift reductions; for Sat3 the target (0,*,0,0)
    int input_n = 0; // vertex count of the input hypergraph (lift reductions)

    // Sat3 payload:
    CnfFormula formula;
    bool canonical_instance = false; // trivially true/false formula mapped to a stock yes/no instance

    // Blowup payload:
    std::vector<int> copies; // j-vector, one count per edge position

    // PrependZero payload:
    char branch = 0; // 'A' or 'B'
    int branch_m = -1;
};

// Sidecar text form: a few meta lines then one "v <idx> <role>" line per
// output vertex.
std::string serialize_record(const ReductionRecord& rec);

} // namespace pipart

#endif
