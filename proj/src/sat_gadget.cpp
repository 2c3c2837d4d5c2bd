#include "pipart/reduce/sat_gadget.hpp"

#include <string>

#include "pipart/check.hpp"
#include "pipart/errors.hpp"
#include "pipart/generate.hpp"

namespace pipart {

namespace {

// Vertex layout: per variable i (0-based) a block of 8 at 8*i:
//   +0 x^1  +1 x^2  +2 ~x^1  +3 ~x^2  +4 u^1  +5 u^2  +6 u^3  +7 u^4
// then per clause j a block of 6 at 8*nv + 6*j: w^1..w^6.
struct Layout {
    int nv, nc;
    int x(int i, int copy) const { return 8 * i + copy - 1; }
    int nx(int i, int copy) const { return 8 * i + 2 + copy - 1; }
    int u(int i, int t) const { return 8 * i + 4 + t - 1; }
    int w(int j, int t) const { return 8 * nv + 6 * j + t - 1; }
    int lit(int literal, int copy) const {
        int i = std::abs(literal) - 1;
        return literal > 0 ? x(i, copy) : nx(i, copy);
    }
};

} // namespace

ReductionRecord reduce_sat(const CnfFormula& phi) {
    for (const auto& c : phi.clauses)
        if (c[0] == c[1] && c[1] == c[2])
            throw ApplicabilityError("formula not preprocessed: clause of three equal literals");

    Layout lay{phi.num_vars, static_cast<int>(phi.clauses.size())};
    const int n = 8 * lay.nv + 6 * lay.nc;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(9 * lay.nv + 4 * lay.nc));

    for (int i = 0; i < lay.nv; ++i) {
        // Six-cycle on (x^1, ~x^1, u^1, x^2, ~x^2, u^2): consecutive triples.
        const int c6[6] = {lay.x(i, 1), lay.nx(i, 1), lay.u(i, 1),
                           lay.x(i, 2), lay.nx(i, 2), lay.u(i, 2)};
        for (int s = 0; s < 6; ++s)
            edges.push_back({c6[s], c6[(s + 1) % 6], c6[(s + 2) % 6]});
        // Forcing gadget: all triples of {u^1, u^2, u^3} with u^4.
        edges.push_back({lay.u(i, 1), lay.u(i, 2), lay.u(i, 4)});
        edges.push_back({lay.u(i, 1), lay.u(i, 3), lay.u(i, 4)});
        edges.push_back({lay.u(i, 2), lay.u(i, 3), lay.u(i, 4)});
    }

    for (int j = 0; j < lay.nc; ++j) {
        const auto& c = phi.clauses[static_cast<std::size_t>(j)];
        for (int s = 0; s < 3; ++s) {
            // A repeated literal uses its second copy on the later slot.
            int copy = 1;
            for (int t = 0; t < s; ++t)
                if (c[static_cast<std::size_t>(t)] == c[static_cast<std::size_t>(s)]) copy = 2;
            edges.push_back({lay.lit(c[static_cast<std::size_t>(s)], copy), lay.w(j, 2 * s + 1),
                             lay.w(j, 2 * s + 2)});
        }
        edges.push_back({lay.w(j, 2), lay.w(j, 4), lay.w(j, 6)});
    }

    ReductionRecord rec;
    rec.kind = ReductionKind::Sat3;
    rec.output = Hypergraph(n, 3, std::move(edges));
    rec.output_pi = PiVector::parse("0*00");
    rec.input_pi = rec.output_pi;
    rec.formula = phi;
    rec.roles.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < lay.nv; ++i) {
        for (int copy = 1; copy <= 2; ++copy) rec.roles.push_back("x:" + std::to_string(i + 1) + ":" + std::to_string(copy));
        for (int copy = 1; copy <= 2; ++copy) rec.roles.push_back("nx:" + std::to_string(i + 1) + ":" + std::to_string(copy));
        for (int t = 1; t <= 4; ++t) rec.roles.push_back("u:" + std::to_string(i + 1) + ":" + std::to_string(t));
    }
    for (int j = 0; j < lay.nc; ++j)
        for (int t = 1; t <= 6; ++t) rec.roles.push_back("w:" + std::to_string(j + 1) + ":" + std::to_string(t));
    return rec;
}

ReductionRecord reduce_sat(const PreprocessedCnf& pre) {
    if (pre.status == CnfStatus::Formula) return reduce_sat(pre.formula);

    ReductionRecord rec;
    rec.kind = ReductionKind::Sat3;
    rec.output_pi = PiVector::parse("0*00");
    rec.input_pi = rec.output_pi;
    rec.formula = pre.formula;
    rec.canonical_instance = true;
    if (pre.status == CnfStatus::TriviallyTrue) {
        // The forcing gadget: a stock yes-instance (unique valid split).
        rec.output = Hypergraph(4, 3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    } else {
        // Complete(4,3) admits no (0,*,0,0)-partition.
        rec.output = make_complete(4, 3);
    }
    for (int v = 0; v < 4; ++v) rec.roles.push_back("canon:" + std::to_string(v));
    return rec;
}

std::vector<bool> pull_back_sat(const ReductionRecord& rec, const Bipartition& p) {
    if (rec.kind != ReductionKind::Sat3)
        throw ApplicabilityError("pull_back_sat needs a sat reduction record");
    if (check_partition(rec.output, rec.output_pi, p))
        throw ApplicabilityError("partition is not a valid split of the built instance");

    Layout lay{rec.formula.num_vars, static_cast<int>(rec.formula.clauses.size())};
    std::vector<bool> assignment(static_cast<std::size_t>(rec.formula.num_vars), false);
    if (!rec.canonical_instance)
        for (int i = 0; i < lay.nv; ++i)
            assignment[static_cast<std::size_t>(i)] = !p.in_v1(lay.x(i, 1));
    if (!eval_cnf(rec.formula, assignment))
        throw InternalError("pulled-back assignment does not satisfy the formula");
    return assignment;
}

} // namespace pipart
