#ifndef PIPART_REDUCE_CNF_HPP
#define PIPART_REDUCE_CNF_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace pipart {

// A 3-CNF formula. Literals are signed 1-based variable indices; clauses may
// repeat a literal (width stays exactly 3).
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    bool operator==(const CnfFormula& o) const {
        return num_vars == o.num_vars && clauses == o.clauses;
    }
};

enum class CnfStatus { Formula, TriviallyTrue, TriviallyFalse };

struct PreprocessedCnf {
    CnfStatus status = CnfStatus::Formula;
    CnfFormula formula;       // meaningful when status == Formula
    std::vector<int> forced;  // literals fixed while eliminating (x v x v x) clauses
};

// Eliminates clauses of three equal literals to fixpoint: such a clause
// forces its literal, which deletes satisfied clauses and strips the negated
// literal elsewhere (two-literal residues are re-tripled as (l1 v l1 v l2)).
// An emptied clause yields TriviallyFalse, an emptied clause list
// TriviallyTrue. Satisfiability is preserved; variable indices are kept.
PreprocessedCnf preprocess_cnf(const CnfFormula& phi);

// assignment[i] is the value of variable i+1.
bool eval_cnf(const CnfFormula& phi, const std::vector<bool>& assignment);

// Exhaustive satisfiability oracle; raises ResourceError past max_vars.
bool cnf_satisfiable(const CnfFormula& phi, int max_vars = 24);

// DIMACS: 'c' comments, header "p cnf <vars> <clauses>", zero-terminated
// clauses. Clauses that are not exactly 3 literals wide are rejected.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& phi);

} // namespace pipart

#endif
