#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pipart/check.hpp"
#include "pipart/errors.hpp"
#include "pipart/generate.hpp"
#include "pipart/io.hpp"
#include "pipart/subsets.hpp"

using namespace pipart;

namespace {

// The 4-vertex forcing gadget: edges are all triples through vertex 3.
Hypergraph gadget_h() { return Hypergraph(4, 3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

Bipartition random_partition(int n, std::mt19937_64& rng) {
    std::vector<Side> side;
    for (int v = 0; v < n; ++v) side.push_back(rng() % 2 ? Side::One : Side::Two);
    return Bipartition{std::move(side)};
}

PiVector random_pi(int k, std::mt19937_64& rng) {
    std::vector<Mark> e;
    for (int i = 0; i <= k; ++i) e.push_back(static_cast<Mark>(rng() % 3));
    return PiVector{std::move(e)};
}

} // namespace

TEST_CASE("pattern vector parsing and predicates") {
    PiVector pi = PiVector::parse("0*00");
    CHECK(pi.k() == 3);
    CHECK(pi.at(1) == Mark::Star);
    CHECK(pi.is_one_free());
    CHECK(!pi.is_all_zero());
    CHECK(!pi.has_both_zero_and_one());
    CHECK(!pi.is_alternating());
    CHECK(!pi.has_consecutive_stars());

    CHECK(PiVector::parse("0*0*").is_alternating());
    CHECK(PiVector::parse("0*0*0").is_alternating());
    CHECK(!PiVector::parse("0*0*1").is_alternating());
    CHECK(PiVector::parse("0**0").has_consecutive_stars());
    CHECK(PiVector::parse("01*0").has_both_zero_and_one());
    CHECK(PiVector::parse("0000").is_all_zero());

    CHECK_THROWS_AS(PiVector::parse("0"), UsageError);
    CHECK_THROWS_AS(PiVector::parse("0x0"), UsageError);
}

TEST_CASE("pattern complement and reversal") {
    CHECK(PiVector::parse("0*00").complemented() == PiVector::parse("1*11"));
    CHECK(PiVector::parse("***").complemented() == PiVector::parse("***"));
    CHECK(PiVector::parse("01*").complemented() == PiVector::parse("10*"));

    CHECK(PiVector::parse("00*0").reversed() == PiVector::parse("0*00"));
    CHECK(PiVector::parse("0*0").reversed() == PiVector::parse("0*0"));
    CHECK(PiVector::parse("0**00").reversed() == PiVector::parse("00**0"));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        PiVector pi = random_pi(1 + static_cast<int>(rng() % 6), rng);
        CHECK(pi.complemented().complemented() == pi);
        CHECK(pi.reversed().reversed() == pi);
    }
}

TEST_CASE("hypergraph canonicalization and membership") {
    Hypergraph g(5, 3, {{4, 2, 0}, {1, 2, 3}, {2, 4, 0}});
    CHECK(g.edge_count() == 2); // the two spellings of {0,2,4} collapse
    CHECK(g.edges()[0] == Edge{0, 2, 4});
    CHECK(g.is_edge({4, 0, 2}));
    CHECK(!g.is_edge({0, 1, 2}));

    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1}}), UsageError);
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 3}}), UsageError);
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 1}}), UsageError);
    CHECK_THROWS_AS(Hypergraph(3, 0), UsageError);
}

TEST_CASE("check_partition on the forcing gadget") {
    Hypergraph h = gadget_h();
    PiVector pi = PiVector::parse("0*00");

    CHECK(!check_partition(h, pi, Bipartition::parse("2221")));

    auto v = check_partition(h, pi, Bipartition::parse("1222"));
    REQUIRE(v.has_value());
    CHECK(v->witness == std::vector<int>{1, 2, 3});
    CHECK(v->count_in_v1 == 0);
    CHECK(v->kind == ViolationKind::EdgeForbidden);

    Hypergraph empty = make_empty(4, 3);
    CHECK(!check_partition(empty, pi, Bipartition::parse("1122")));

    CHECK_THROWS_AS(check_partition(h, PiVector::parse("0*0"), Bipartition::parse("2221")),
                    UsageError);
    CHECK_THROWS_AS(check_partition(h, pi, Bipartition::parse("22")), UsageError);
}

TEST_CASE("check_partition reports the lexicographically least witness") {
    // A pattern with a One entry forces the full subset scan.
    Hypergraph g = make_empty(4, 3);
    auto v = check_partition(g, PiVector::parse("0111"), Bipartition::parse("1122"));
    REQUIRE(v.has_value());
    CHECK(v->witness == std::vector<int>{0, 1, 2});
    CHECK(v->kind == ViolationKind::NonEdgeRequired);
}

TEST_CASE("hypergraph complement") {
    CHECK(complement_hypergraph(make_complete(4, 3)) == make_empty(4, 3));
    CHECK(complement_hypergraph(make_empty(4, 3)) == make_complete(4, 3));
    CHECK(complement_hypergraph(gadget_h()) == Hypergraph(4, 3, {{0, 1, 2}}));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Hypergraph g = make_random(3 + static_cast<int>(rng() % 6), 3, 0.4, rng());
        CHECK(complement_hypergraph(complement_hypergraph(g)) == g);
    }
}

TEST_CASE("link and induced subgraph") {
    Hypergraph h = gadget_h();

    SubHypergraph lk = link(h, {3});
    CHECK(lk.graph.k() == 2);
    CHECK(lk.graph.n() == 3);
    CHECK(lk.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(lk.to_parent == std::vector<int>{0, 1, 2});

    SubHypergraph whole = link(h, {});
    CHECK(whole.graph == h);

    Hypergraph single(3, 3, {{0, 1, 2}});
    SubHypergraph tiny = link(single, {0, 1});
    CHECK(tiny.graph.k() == 1);
    CHECK(tiny.graph.edges() == std::vector<Edge>{{0}});
    CHECK(tiny.to_parent == std::vector<int>{2});

    CHECK_THROWS_AS(link(h, {0, 1, 2}), UsageError);

    CHECK(induced(h, {0, 1, 2}).graph.edge_count() == 0);
    CHECK(induced(h, {0, 1, 2, 3}).graph == h);
    CHECK(induced(h, {0, 1}).graph.edge_count() == 0);
    SubHypergraph sub = induced(h, {1, 2, 3});
    CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1, 2}});
    CHECK(sub.to_parent == std::vector<int>{1, 2, 3});
}

TEST_CASE("independent sets and cliques") {
    Hypergraph h = gadget_h();
    CHECK(is_independent(h, {0, 1, 2}));
    CHECK(!is_independent(h, {1, 2, 3}));
    CHECK(is_clique(h, {1, 2, 3}));
    CHECK(!is_clique(h, {0, 1, 2}));
    CHECK(is_independent(h, {0, 1}));
    CHECK(is_clique(h, {0, 1}));
}

TEST_CASE("generators") {
    Hypergraph c63 = make_cycle(6, 3);
    CHECK(c63.n() == 6);
    CHECK(c63.edges() == std::vector<Edge>{{0, 1, 2}, {0, 1, 5}, {0, 4, 5}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}});

    CHECK(make_complete(4, 3).edge_count() == 4);
    CHECK(make_empty(5, 3).edge_count() == 0);
    CHECK(make_cycle(3, 3).edge_count() == 1); // all windows coincide
    for (int m = 4; m <= 9; ++m)
        CHECK(make_cycle(m, 3).edge_count() == static_cast<std::size_t>(m));
    CHECK_THROWS_AS(make_cycle(2, 3), UsageError);

    CHECK(make_random(6, 3, 0.0, 42) == make_empty(6, 3));
    CHECK(make_random(6, 3, 1.0, 42) == make_complete(6, 3));
    CHECK(make_random(8, 3, 0.5, 7) == make_random(8, 3, 0.5, 7));
    CHECK(make_random(8, 3, 0.5, 7) != make_random(8, 3, 0.5, 8));
    CHECK_THROWS_AS(make_random(4, 3, 1.5, 1), UsageError);
}

TEST_CASE("hypergraph text format") {
    const char* text = "p hg 3 4 3\n0 1 3\n0 2 3\n1 2 3\n";
    Hypergraph g = parse_hypergraph(text);
    CHECK(g == gadget_h());
    CHECK(serialize_hypergraph(g) == text);

    // Comments and blank lines are tolerated; output is canonical.
    Hypergraph g2 = parse_hypergraph("# gadget\n\np hg 3 4 3\n1 2 3\n0 2 3\n0 1 3\n");
    CHECK(serialize_hypergraph(g2) == text);

    auto line_of = [](const auto& fn) {
        try {
            fn();
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of([] { parse_hypergraph("p hg 3 3 1\n0 1 5\n"); }) == 2);
    CHECK(line_of([] { parse_hypergraph("p graph 3 3 1\n0 1 2\n"); }) == 1);
    CHECK(line_of([] { parse_hypergraph("p hg 3 4 1\n0 1\n"); }) == 2);
    CHECK(line_of([] { parse_hypergraph("p hg 3 4 2\n0 1 2\n0 1 2\n"); }) == 3);
    CHECK(line_of([] { parse_hypergraph("p hg 3 4 1\n2 1 0\n"); }) == 2);
    CHECK_THROWS_AS(parse_hypergraph("p hg 3 4 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        Hypergraph g3 = make_random(2 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 3),
                                    0.5, rng());
        CHECK(parse_hypergraph(serialize_hypergraph(g3)) == g3);
    }
}

TEST_CASE("bipartition basics") {
    Bipartition p = Bipartition::parse("2221");
    CHECK(p.v1_members() == std::vector<int>{3});
    CHECK(p.count_in_v1({0, 1, 3}) == 1);
    CHECK(p.swapped() == Bipartition::parse("1112"));
    CHECK(p.to_string() == "2221");
    CHECK(Bipartition::parse("1222") < Bipartition::parse("2122"));
    CHECK(Bipartition::from_v1(4, {3}) == p);
    CHECK_THROWS_AS(Bipartition::parse("120"), UsageError);
}

TEST_CASE("complementation and reversal laws") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng() % 7);
        int k = 2 + static_cast<int>(rng() % 3);
        Hypergraph g = make_random(n, k, 0.3 + 0.1 * static_cast<double>(rng() % 5), rng());
        PiVector pi = random_pi(k, rng);
        Bipartition p = random_partition(n, rng);

        bool base = !check_partition(g, pi, p).has_value();
        CHECK(base == !check_partition(complement_hypergraph(g), pi.complemented(), p).has_value());
        CHECK(base == !check_partition(g, pi.reversed(), p.swapped()).has_value());
    }
}
