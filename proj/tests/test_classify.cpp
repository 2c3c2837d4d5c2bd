#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "pipart/classify/classify.hpp"
#include "pipart/classify/pi_rules.hpp"
#include "pipart/classify/tables.hpp"
#include "pipart/errors.hpp"

using namespace pipart;

namespace {

std::vector<PiVector> all_vectors(int length) {
    std::vector<PiVector> out;
    int total = 1;
    for (int i = 0; i < length; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        int c = code;
        std::vector<Mark> e;
        for (int i = 0; i < length; ++i) {
            e.push_back(static_cast<Mark>(c % 3));
            c /= 3;
        }
        out.emplace_back(std::move(e));
    }
    return out;
}

bool replays(const PiVector& query, const ComplexityVerdict& v) {
    if (v.derivation.empty()) return false;
    PiVector cur = v.derivation.front().from;
    for (const DerivationStep& s : v.derivation) {
        if (s.from != cur) return false;
        cur = apply_rule(s.rule, cur);
        if (cur != s.to) return false;
    }
    if (v.status == Complexity::NPComplete) return cur == query;
    return v.derivation.front().from == query;
}

} // namespace

TEST_CASE("sigma stretches patterns") {
    CHECK(sigma(PiVector::parse("0*00")) == PiVector::parse("0**00"));
    CHECK(sigma(PiVector::parse("0**0")) == PiVector::parse("0***0"));
    CHECK(sigma(PiVector::parse("0000")) == PiVector::parse("00000"));
    CHECK(sigma(PiVector::parse("00*0")) == PiVector::parse("00**0"));
    CHECK_THROWS_AS(sigma(PiVector::parse("0*10")), ApplicabilityError);

    CHECK(sigma_applicable(PiVector::parse("0**0")));
    CHECK(sigma_applicable(PiVector::parse("0*00")));
    CHECK(!sigma_applicable(PiVector::parse("0*0*0")));
    CHECK(!sigma_applicable(PiVector::parse("00*0*0")));
}

TEST_CASE("normalization") {
    NormalizationLog a = normalize(PiVector::parse("1*11"));
    CHECK(a.complemented);
    CHECK(!a.reversed);
    CHECK(a.result == PiVector::parse("0*00"));

    NormalizationLog b = normalize(PiVector::parse("00*0"));
    CHECK(!b.complemented);
    CHECK(b.reversed);
    CHECK(b.result == PiVector::parse("0*00"));

    NormalizationLog c = normalize(PiVector::parse("0*0"));
    CHECK(!c.complemented);
    CHECK(!c.reversed);
    CHECK(c.result == PiVector::parse("0*0"));

    NormalizationLog d = normalize(PiVector::parse("11*1"));
    CHECK(d.complemented);
    CHECK(d.reversed);
    CHECK(d.result == PiVector::parse("0*00"));

    // Mixed vectors are never complemented, only possibly reversed.
    NormalizationLog e = normalize(PiVector::parse("10*0"));
    CHECK(!e.complemented);
}

TEST_CASE("classify examples") {
    CHECK(classify(PiVector::parse("0**0")).status == Complexity::NPComplete);
    CHECK(classify(PiVector::parse("0*0*0")).status == Complexity::Polynomial);
    CHECK(classify(PiVector::parse("0*00*0")).status == Complexity::Open);
    CHECK(classify(PiVector::parse("000*00")).status == Complexity::NPComplete);
    CHECK(classify(PiVector::parse("0*0")).status == Complexity::Polynomial);   // k = 2
    CHECK(classify(PiVector::parse("*000")).status == Complexity::Polynomial);  // trivial end
    CHECK(classify(PiVector::parse("01*0")).status == Complexity::Polynomial);  // both values
    CHECK(classify(PiVector::parse("0000")).status == Complexity::Polynomial);  // all zero

    ComplexityVerdict alt = classify(PiVector::parse("0*0*0"));
    REQUIRE(!alt.derivation.empty());
    CHECK(alt.derivation.back().rule == "alternating");
}

TEST_CASE("classification reproduces the k=3 and k=4 tables") {
    std::map<Complexity, int> count4, count5;
    std::set<std::string> npc4, npc5;
    for (const PiVector& pi : all_vectors(4)) {
        ComplexityVerdict v = classify(pi);
        ++count4[v.status];
        if (v.status == Complexity::NPComplete) npc4.insert(pi.to_string());
        CHECK(replays(pi, v));
    }
    CHECK(count4[Complexity::NPComplete] == 6);
    CHECK(count4[Complexity::Polynomial] == 75);
    CHECK(count4[Complexity::Open] == 0);
    for (const PiVector& t : npc_k3()) CHECK(npc4.count(t.to_string()) == 1);

    for (const PiVector& pi : all_vectors(5)) {
        ComplexityVerdict v = classify(pi);
        ++count5[v.status];
        if (v.status == Complexity::NPComplete) npc5.insert(pi.to_string());
    }
    CHECK(count5[Complexity::NPComplete] == 12);
    CHECK(count5[Complexity::Polynomial] == 231);
    CHECK(count5[Complexity::Open] == 0);
    for (const PiVector& t : npc_k4()) CHECK(npc5.count(t.to_string()) == 1);
}

TEST_CASE("classification reproduces the k=5 table with its open orbit") {
    std::set<std::string> want_open, want_npc;
    for (const PiVector& v : open_k5())
        for (const PiVector& w : {v, v.reversed(), v.complemented(), v.complemented().reversed()})
            want_open.insert(w.to_string());
    for (const PiVector& v : npc_k5())
        for (const PiVector& w : {v, v.reversed(), v.complemented(), v.complemented().reversed()})
            want_npc.insert(w.to_string());
    CHECK(want_open.size() == 10);
    CHECK(want_npc.size() == 20);

    int npc = 0, open = 0, poly = 0;
    for (const PiVector& pi : all_vectors(6)) {
        ComplexityVerdict v = classify(pi);
        switch (v.status) {
        case Complexity::NPComplete:
            ++npc;
            CHECK(want_npc.count(pi.to_string()) == 1);
            break;
        case Complexity::Open:
            ++open;
            CHECK(want_open.count(pi.to_string()) == 1);
            break;
        case Complexity::Polynomial:
            ++poly;
            CHECK(want_npc.count(pi.to_string()) == 0);
            CHECK(want_open.count(pi.to_string()) == 0);
            break;
        }
    }
    CHECK(npc == 20);
    CHECK(open == 10);
    CHECK(poly == 729 - 30);
}

TEST_CASE("status is invariant under complement and reversal") {
    for (int len : {4, 5, 6}) {
        for (const PiVector& pi : all_vectors(len)) {
            Complexity s = classify(pi).status;
            CHECK(classify(pi.complemented()).status == s);
            CHECK(classify(pi.reversed()).status == s);
        }
    }
}

TEST_CASE("closure engine rederives the proved tables from the k=3 bases") {
    // Completeness against the tables at k = 4 and 5 ...
    for (const auto& table : {npc_k4(), npc_k5()}) {
        for (const PiVector& v : table) {
            PiVector norm = normalize(v).result;
            auto chain = derive_npc_chain(norm, 6);
            CHECK_MESSAGE(chain.has_value(), norm.to_string());
        }
    }
    // ... and soundness: the unresolved vectors stay unreachable even deeper.
    for (const PiVector& v : open_k5()) {
        CHECK(!derive_npc_chain(normalize(v).result, 8).has_value());
    }
    // A polynomial pattern is never derived.
    CHECK(!derive_npc_chain(PiVector::parse("0*0*0"), 8).has_value());
    CHECK(!derive_npc_chain(PiVector::parse("00000"), 8).has_value());
}

TEST_CASE("derivations for larger uniformities") {
    // Doubling image of the base: hard for k = 6.
    ComplexityVerdict dbl = classify(PiVector::parse("00*0000"));
    CHECK(dbl.status == Complexity::NPComplete);
    CHECK(replays(PiVector::parse("00*0000"), dbl));

    // Single Star with zero ends stays hard at any uniformity.
    for (const char* s : {"0*00000", "00000*0", "000*000", "1*111111"}) {
        ComplexityVerdict v = classify(PiVector::parse(s));
        CHECK_MESSAGE(v.status == Complexity::NPComplete, s);
        CHECK(replays(PiVector::parse(s), v));
    }

    // All-star middle: repeated sigma lifts.
    ComplexityVerdict wide = classify(PiVector::parse("0*****0"));
    CHECK(wide.status == Complexity::NPComplete);
    CHECK(replays(PiVector::parse("0*****0"), wide));

    // Depth zero cannot reach a k=6 vector; the verdict degrades to Open.
    CHECK(classify(PiVector::parse("00*0000"), 0).status == Complexity::Open);
}

TEST_CASE("rule replay validates side conditions") {
    CHECK(apply_rule("sigma", PiVector::parse("0*00")) == PiVector::parse("0**00"));
    CHECK(apply_rule("double", PiVector::parse("0*00")) == PiVector::parse("00*0000"));
    CHECK(apply_rule("prepend-zero", PiVector::parse("0*00")) == PiVector::parse("00*00"));
    CHECK(apply_rule("append-zero", PiVector::parse("0*00")) == PiVector::parse("0*000"));
    CHECK(apply_rule("reverse", PiVector::parse("0*00")) == PiVector::parse("00*0"));
    CHECK(apply_rule("complement", PiVector::parse("0*00")) == PiVector::parse("1*11"));

    CHECK_THROWS_AS(apply_rule("sigma", PiVector::parse("0*0*0")), ApplicabilityError);
    CHECK_THROWS_AS(apply_rule("sigma", PiVector::parse("0000")), ApplicabilityError);
    CHECK_THROWS_AS(apply_rule("prepend-zero", PiVector::parse("00*")), ApplicabilityError);
    CHECK_THROWS_AS(apply_rule("base-sat", PiVector::parse("0**0")), ApplicabilityError);
    CHECK_THROWS_AS(apply_rule("no-such-rule", PiVector::parse("0*00")), ApplicabilityError);
}

TEST_CASE("verdict report format") {
    std::string report = verdict_report(classify(PiVector::parse("11*1")));
    CHECK(report.find("verdict NPComplete\n") == 0);
    CHECK(report.find("step base-sat 0*00 -> 0*00\n") != std::string::npos);
    CHECK(report.find("step complement 00*0 -> 11*1\n") != std::string::npos);
}
