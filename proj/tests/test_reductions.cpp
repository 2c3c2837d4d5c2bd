#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "pipart/errors.hpp"
#include "pipart/generate.hpp"
#include "pipart/reduce/exact_cover.hpp"
#include "pipart/reduce/lifts.hpp"
#include "pipart/reduce/sat_gadget.hpp"
#include "pipart/solve/solvers.hpp"

using namespace pipart;

namespace {

Hypergraph gadget_h() { return Hypergraph(4, 3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

CnfFormula make_formula(int vars, std::vector<std::array<int, 3>> clauses) {
    CnfFormula phi;
    phi.num_vars = vars;
    phi.clauses = std::move(clauses);
    return phi;
}

} // namespace

TEST_CASE("cnf preprocessing") {
    PreprocessedCnf a = preprocess_cnf(make_formula(3, {{1, 1, 1}, {-1, 2, 3}}));
    CHECK(a.status == CnfStatus::Formula);
    CHECK(a.forced == std::vector<int>{1});
    REQUIRE(a.formula.clauses.size() == 1);
    CHECK(a.formula.clauses[0] == std::array<int, 3>{2, 2, 3});

    PreprocessedCnf b = preprocess_cnf(make_formula(1, {{1, 1, 1}, {-1, -1, -1}}));
    CHECK(b.status == CnfStatus::TriviallyFalse);

    PreprocessedCnf c = preprocess_cnf(make_formula(3, {{1, 2, 3}}));
    CHECK(c.status == CnfStatus::Formula);
    CHECK(c.formula == make_formula(3, {{1, 2, 3}}));
    CHECK(c.forced.empty());

    PreprocessedCnf d = preprocess_cnf(make_formula(2, {{1, 1, 1}, {2, 2, 2}}));
    CHECK(d.status == CnfStatus::TriviallyTrue);
    CHECK(d.forced == std::vector<int>{1, 2});

    // Chained forcing: x1 shrinks the second clause to a forcing clause.
    PreprocessedCnf e = preprocess_cnf(make_formula(2, {{1, 1, 1}, {-1, 2, 2}}));
    CHECK(e.status == CnfStatus::TriviallyTrue);
    CHECK(e.forced == std::vector<int>{1, 2});

    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        int vars = 1 + static_cast<int>(rng() % 4);
        CnfFormula phi;
        phi.num_vars = vars;
        int m = 1 + static_cast<int>(rng() % 6);
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> cl;
            for (auto& lit : cl) {
                int v = 1 + static_cast<int>(rng() % vars);
                lit = rng() % 2 ? v : -v;
            }
            phi.clauses.push_back(cl);
        }
        PreprocessedCnf pre = preprocess_cnf(phi);
        bool expect = cnf_satisfiable(phi);
        bool got = pre.status == CnfStatus::TriviallyTrue   ? true
                   : pre.status == CnfStatus::TriviallyFalse ? false
                                                             : cnf_satisfiable(pre.formula);
        CHECK(got == expect);
        if (pre.status == CnfStatus::Formula)
            for (const auto& cl : pre.formula.clauses)
                CHECK(!(cl[0] == cl[1] && cl[1] == cl[2]));
    }
}

TEST_CASE("dimacs parsing") {
    CnfFormula phi = parse_dimacs("c a comment\np cnf 3 2\n1 -2 3 0\n-1 2 2 0\n");
    CHECK(phi.num_vars == 3);
    REQUIRE(phi.clauses.size() == 2);
    CHECK(phi.clauses[1] == std::array<int, 3>{-1, 2, 2});
    CHECK(parse_dimacs(serialize_dimacs(phi)) == phi);

    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);      // width 2
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 -1 2 0\n"), ParseError); // width 4
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);    // var out of range
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 -2\n"), ParseError);     // missing terminator
    CHECK_THROWS_AS(parse_dimacs("p sat 2 1\n1 2 -2 0\n"), ParseError);   // bad header
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 -2 0\n"), ParseError);   // count mismatch
}

TEST_CASE("sat gadget size and layout") {
    ReductionRecord rec = reduce_sat(make_formula(3, {{1, 2, 3}}));
    CHECK(rec.output.n() == 30);          // 8 per variable + 6 per clause
    CHECK(rec.output.edge_count() == 31); // 9 per variable + 4 per clause
    CHECK(rec.output_pi == PiVector::parse("0*00"));
    CHECK(rec.roles.size() == 30);
    CHECK(rec.roles[0] == "x:1:1");
    CHECK(rec.roles[7] == "u:1:4");
    CHECK(rec.roles[24] == "w:1:1");

    // Repeated literal: the clause uses both copies of x1, then x2's first.
    ReductionRecord rep = reduce_sat(make_formula(2, {{1, 1, 2}}));
    CHECK(rep.output.is_edge({0, 16, 17}));  // x1^1, w^1, w^2
    CHECK(rep.output.is_edge({1, 18, 19}));  // x1^2, w^3, w^4
    CHECK(rep.output.is_edge({8, 20, 21}));  // x2^1, w^5, w^6
    CHECK(rep.output.is_edge({17, 19, 21})); // w^2, w^4, w^6

    CHECK_THROWS_AS(reduce_sat(make_formula(1, {{1, 1, 1}})), ApplicabilityError);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 20; ++i) {
        int vars = 1 + static_cast<int>(rng() % 4);
        CnfFormula phi;
        phi.num_vars = vars;
        int m = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> cl;
            for (auto& lit : cl) {
                int v = 1 + static_cast<int>(rng() % vars);
                lit = rng() % 2 ? v : -v;
            }
            phi.clauses.push_back(cl);
        }
        PreprocessedCnf pre = preprocess_cnf(phi);
        if (pre.status != CnfStatus::Formula) continue;
        ReductionRecord r = reduce_sat(pre.formula);
        CHECK(r.output.n() == 8 * pre.formula.num_vars + 6 * static_cast<int>(pre.formula.clauses.size()));
        CHECK(r.output.edge_count() ==
              static_cast<std::size_t>(9 * pre.formula.num_vars + 4 * static_cast<int>(pre.formula.clauses.size())));
    }
}

TEST_CASE("sat reduction decides satisfiability") {
    // A satisfiable formula.
    ReductionRecord sat_rec = reduce_sat(make_formula(3, {{1, 2, 3}}));
    auto p = backtrack_first(sat_rec.output, sat_rec.output_pi);
    REQUIRE(p.has_value());
    std::vector<bool> a = pull_back_sat(sat_rec, *p);
    CHECK(eval_cnf(sat_rec.formula, a));

    // All eight sign patterns over three variables: unsatisfiable.
    CnfFormula contra;
    contra.num_vars = 3;
    for (int s = 0; s < 8; ++s)
        contra.clauses.push_back({(s & 1) ? 1 : -1, (s & 2) ? 2 : -2, (s & 4) ? 3 : -3});
    CHECK(!cnf_satisfiable(contra));
    ReductionRecord un_rec = reduce_sat(contra);
    CHECK(!backtrack_first(un_rec.output, un_rec.output_pi).has_value());

    // A forced variable survives the pull-back.
    PreprocessedCnf pre = preprocess_cnf(make_formula(3, {{1, 1, 1}, {-1, 2, 3}}));
    REQUIRE(pre.status == CnfStatus::Formula);
    ReductionRecord forced_rec = reduce_sat(pre.formula);
    auto q = backtrack_first(forced_rec.output, forced_rec.output_pi);
    REQUIRE(q.has_value());
    std::vector<bool> b = pull_back_sat(forced_rec, *q);
    for (int lit : pre.forced) b[static_cast<std::size_t>(std::abs(lit)) - 1] = lit > 0;
    CHECK(b[0]);
    CHECK(eval_cnf(make_formula(3, {{1, 1, 1}, {-1, 2, 3}}), b));

    // An invalid partition is rejected.
    CHECK_THROWS_AS(pull_back_sat(sat_rec, Bipartition::uniform(sat_rec.output.n(), Side::Two)),
                    ApplicabilityError);
}

TEST_CASE("sat reduction canonical instances") {
    ReductionRecord yes = reduce_sat(preprocess_cnf(make_formula(1, {{1, 1, 1}})));
    CHECK(yes.canonical_instance);
    CHECK(yes.output == gadget_h());
    CHECK(backtrack_first(yes.output, yes.output_pi).has_value());

    ReductionRecord no = reduce_sat(preprocess_cnf(make_formula(1, {{1, 1, 1}, {-1, -1, -1}})));
    CHECK(no.canonical_instance);
    CHECK(no.output == make_complete(4, 3));
    CHECK(!backtrack_first(no.output, no.output_pi).has_value());
}

TEST_CASE("sigma lift") {
    ReductionRecord rec = sigma_lift(gadget_h(), PiVector::parse("0*00"));
    CHECK(rec.output.n() == 8);
    CHECK(rec.output.edge_count() == 13);
    CHECK(rec.output_pi == PiVector::parse("0**00"));
    CHECK(rec.roles[4] == "apex:1");

    // The lifted image of the unique input partition is valid: input side one
    // {3} plus the first apex.
    Bipartition lifted = Bipartition::from_v1(8, {3, 4});
    CHECK(!check_partition(rec.output, rec.output_pi, lifted));

    // A no-instance lifts to a no-instance.
    ReductionRecord none = sigma_lift(make_complete(4, 3), PiVector::parse("0*00"));
    CHECK(!brute_force_first(none.output, none.output_pi).has_value());

    // Pull-back of every output partition is valid on the input.
    PartitionList outs = brute_force_all(rec.output, rec.output_pi);
    CHECK(!outs.empty());
    for (const Bipartition& q : outs) {
        Bipartition back = pull_back(rec, q);
        CHECK(back == Bipartition::parse("2221")); // H's partition is unique
    }

    CHECK_THROWS_AS(sigma_lift(make_cycle(5, 4), PiVector::parse("0*0*0")), ApplicabilityError);
    CHECK_THROWS_AS(sigma_lift(gadget_h(), PiVector::parse("0*10")), ApplicabilityError);
    CHECK_THROWS_AS(sigma_lift(gadget_h(), PiVector::parse("0000")), ApplicabilityError);
    CHECK_THROWS_AS(sigma_lift(gadget_h(), PiVector::parse("0*0*")), ApplicabilityError);
}

TEST_CASE("doubling blow-up") {
    Hypergraph single(3, 3, {{0, 1, 2}});
    ReductionRecord rec = double_up(single, PiVector::parse("0*00"));
    CHECK(rec.output_pi == PiVector::parse("00*0000"));
    CHECK(rec.output.n() == 3 * 11); // 6 copies + 5 anchors per vertex
    // The blown edge takes the first two copies of each endpoint.
    CHECK(rec.output.is_edge({0, 1, 11, 12, 22, 23}));
    CHECK(rec.roles[0] == "copy:0:1");
    CHECK(rec.roles[6] == "anchor:0:1");

    // Copies of one vertex agree in every valid output partition, so the
    // pull-back is well-defined; validate decisions and pull-backs.
    for (double p : {0.0, 0.5, 1.0}) {
        Hypergraph g = make_random(4, 3, p, 99);
        ReductionRecord r = double_up(g, PiVector::parse("0*00"));
        bool in_yes = brute_force_first(g, PiVector::parse("0*00")).has_value();
        PartitionList outs = backtrack_all(r.output, r.output_pi, 200);
        CHECK(in_yes == !outs.empty());
        for (const Bipartition& q : outs) {
            for (int u = 0; u < g.n(); ++u)
                for (int c = 0; c < 6; ++c) CHECK(q.in_v1(u * 11) == q.in_v1(u * 11 + c));
            CHECK(!check_partition(g, PiVector::parse("0*00"), pull_back(r, q)));
        }
    }
}

TEST_CASE("general blow-up compatibility check") {
    Hypergraph single(3, 3, {{0, 1, 2}});
    // Incompatible copy counts: position sums collide with mismatched marks.
    CHECK_THROWS_AS(blowup(single, PiVector::parse("0*00"), {2, 2, 2}, PiVector::parse("0*00000")),
                    ApplicabilityError);
    CHECK_THROWS_AS(blowup(single, PiVector::parse("0*00"), {2, 2}, PiVector::parse("00*0000")),
                    ApplicabilityError);
    CHECK_THROWS_AS(blowup(single, PiVector::parse("0*00"), {2, 2, 2}, PiVector::parse("00**000")),
                    ApplicabilityError);
    // A non-doubling j-vector that is compatible: j = (1,1,1) onto the same pattern.
    ReductionRecord rec = blowup(single, PiVector::parse("0*00"), {1, 1, 1}, PiVector::parse("0*00"));
    CHECK(rec.output.n() == 3 * 5);
    bool in_yes = brute_force_first(single, PiVector::parse("0*00")).has_value();
    CHECK(in_yes == backtrack_first(rec.output, rec.output_pi).has_value());
}

TEST_CASE("prepend-zero branch selection") {
    Hypergraph g2(3, 2, {{0, 1}});
    ReductionRecord b = prepend_zero(g2, PiVector::parse("0*0"));
    CHECK(b.branch == 'B');
    CHECK(b.branch_m == 1);
    CHECK(b.output_pi == PiVector::parse("00*0"));
    CHECK(b.output.n() == 3 + 3 * 2 + 1);

    CHECK_THROWS_AS(prepend_zero(g2, PiVector::parse("00*")), ApplicabilityError);

    ReductionRecord a = prepend_zero(gadget_h(), PiVector::parse("0*00"));
    CHECK(a.branch == 'A');
    CHECK(a.output_pi == PiVector::parse("00*00"));
    CHECK(a.output.n() == 5);
    for (const Edge& e : a.output.edges()) CHECK(e.back() == 4); // universal vertex in every edge
}

TEST_CASE("prepend-zero branch A pull-back swaps when the apex sits on side two") {
    ReductionRecord rec = prepend_zero(gadget_h(), PiVector::parse("0*00"));
    // (0,0,*,0,0) demands exactly two side-one vertices per output edge;
    // V1 = {0,1,2} with the universal vertex on side two achieves that.
    Bipartition swapped_case = Bipartition::parse("11122");
    REQUIRE(!check_partition(rec.output, rec.output_pi, swapped_case));
    CHECK(pull_back(rec, swapped_case) == Bipartition::parse("2221"));

    // Every valid output partition pulls back to H's unique partition.
    for (const Bipartition& q : brute_force_all(rec.output, rec.output_pi))
        CHECK(pull_back(rec, q) == Bipartition::parse("2221"));

    CHECK_THROWS_AS(pull_back(rec, Bipartition::uniform(5, Side::Two)), ApplicabilityError);
}

TEST_CASE("prepend-zero equivalence on both branches") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + static_cast<int>(rng() % 5);
        double p = 0.1 * static_cast<double>(1 + rng() % 9);
        PiVector pi = PiVector::parse(i % 2 == 0 ? "0*00" : "00*0");
        Hypergraph g = make_random(n, 3, p, rng());
        ReductionRecord rec = prepend_zero(g, pi);
        CHECK(rec.branch == (i % 2 == 0 ? 'A' : 'B'));
        bool in_yes = brute_force_first(g, pi).has_value();
        PartitionList outs = brute_force_all(rec.output, rec.output_pi);
        CHECK(in_yes == !outs.empty());
        for (const Bipartition& q : outs)
            CHECK(!check_partition(g, pi, pull_back(rec, q)));
    }
}

TEST_CASE("exact cover correspondence") {
    ExactCoverInstance cyc = to_exact_cover(make_cycle(6, 3));
    CHECK(cyc.universe_size == 6);
    CHECK(cyc.sets.size() == 6);
    CHECK(count_exact_covers(cyc) == 3);

    ExactCoverInstance h = to_exact_cover(gadget_h());
    CHECK(count_exact_covers(h) == 1);
    CHECK(h.sets[3].size() == 3); // vertex 3 is incident to all three edges

    CHECK(from_exact_cover(h) == gadget_h());
    CHECK(from_exact_cover(cyc) == make_cycle(6, 3));

    // Isolated vertices become empty sets; both sides count the same factor.
    Hypergraph sparse(5, 3, {{0, 1, 2}});
    ExactCoverInstance inst = to_exact_cover(sparse);
    CHECK(inst.sets[3].empty());
    CHECK(count_exact_covers(inst) == 12); // 3 choices for the edge, 2^2 free sets
    CHECK(brute_force_all(sparse, PiVector::parse("0*00")).size() == 12);
    CHECK(from_exact_cover(inst) == sparse);

    CHECK_THROWS_AS(to_exact_cover(make_cycle(6, 4)), ApplicabilityError);
    ExactCoverInstance bad{2, {{0}, {0}, {0, 1}}};
    CHECK_THROWS_AS(from_exact_cover(bad), ApplicabilityError);
}

TEST_CASE("exact cover text format") {
    ExactCoverInstance inst = to_exact_cover(Hypergraph(5, 3, {{0, 1, 2}}));
    std::string text = serialize_exact_cover(inst);
    CHECK(parse_exact_cover(text) == inst);
    CHECK(text == "p xc 1 5\n0\n0\n0\n\n\n");

    CHECK_THROWS_AS(parse_exact_cover("p xc 2 1\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_exact_cover("p cover 2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_exact_cover("p xc 2 2\n0\n"), ParseError);
}

TEST_CASE("vertex roles are total and injective on originals") {
    Hypergraph g = make_random(4, 3, 0.5, 3);
    std::vector<ReductionRecord> records;
    records.push_back(sigma_lift(g, PiVector::parse("0*00")));
    records.push_back(double_up(g, PiVector::parse("0*00")));
    records.push_back(prepend_zero(g, PiVector::parse("00*0")));
    records.push_back(reduce_sat(make_formula(2, {{1, -2, 2}})));
    for (const ReductionRecord& rec : records) {
        CHECK(rec.roles.size() == static_cast<std::size_t>(rec.output.n()));
        std::set<std::string> orig;
        for (const std::string& role : rec.roles) {
            CHECK(!role.empty());
            if (role.rfind("orig:", 0) == 0) CHECK(orig.insert(role).second);
        }
    }
}

TEST_CASE("record serialization") {
    ReductionRecord rec = sigma_lift(gadget_h(), PiVector::parse("0*00"));
    std::string text = serialize_record(rec);
    CHECK(text.find("kind sigma\n") == 0);
    CHECK(text.find("pi 0**00\n") != std::string::npos);
    CHECK(text.find("v 0 orig:0\n") != std::string::npos);
    CHECK(text.find("v 7 apex:4\n") != std::string::npos);
}
