#ifndef PIPART_SUITES_HPP
#define PIPART_SUITES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pipart {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 0; // 0 = suite default
    int max_n = 24;
};

struct SuiteResult {
    bool pass = false;
    int cases = 0;
};

// Randomized oracle-equivalence suites. Every suite is deterministic for a
// given seed and prints a counterexample for each failing case.
//
//   sparse-dense  enumeration equals the exhaustive count, bound n^4 + 64
//   mixed         solve_mixed equals brute force, bound n^{3k}
//   alternating   GF(2) solver agrees with brute force
//   sat           formula satisfiability == partitionability of the gadget
//   sigma         sigma lift preserves yes/no; pull-backs validate
//   double        doubling blow-up preserves yes/no; pull-backs validate
//   prepend0      prepend-zero (both branches) preserves yes/no; pull-backs validate
//   tables        exhaustive classification of all length 4/5/6 patterns
//   xc            exact-cover count equals (0,*,0,0)-partition count
//   symmetry      complementation and reversal laws on random triples
//   gadget        the 4-vertex forcing gadget has its unique partition
//   cycle         the 6-cycle has exactly its three partitions
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt, std::ostream& log);

// The suites exposed through the CLI.
const std::vector<std::string>& cli_suite_names();

bool is_suite(const std::string& name);

} // namespace pipart

#endif
