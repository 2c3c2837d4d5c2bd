#include "pipart/suites.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <set>

#include "pipart/classify/classify.hpp"
#include "pipart/classify/tables.hpp"
#include "pipart/errors.hpp"
#include "pipart/generate.hpp"
#include "pipart/io.hpp"
#include "pipart/reduce/exact_cover.hpp"
#include "pipart/reduce/lifts.hpp"
#include "pipart/reduce/sat_gadget.hpp"
#include "pipart/solve/solvers.hpp"

namespace pipart {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int index) {
    // splitmix64 step over (seed, index)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void dump_instance(std::ostream& log, const Hypergraph& g, const PiVector& pi) {
    log << "  pi = " << pi.to_string() << "\n" << serialize_hypergraph(g);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// ---- sparse-dense ------------------------------------------------------

std::uint64_t brute_sd_count(const Hypergraph& g, Orientation o) {
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t(1) << g.n();
    for (std::uint64_t m = 0; m < total; ++m) {
        std::vector<int> v1, v2;
        for (int v = 0; v < g.n(); ++v) ((m >> v) & 1 ? v1 : v2).push_back(v);
        const std::vector<int>& indep = o == Orientation::IndependentFirst ? v1 : v2;
        const std::vector<int>& cliq = o == Orientation::IndependentFirst ? v2 : v1;
        if (is_independent(g, indep) && is_clique(g, cliq)) ++count;
    }
    return count;
}

SuiteResult suite_sparse_dense(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 200;
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 4 + static_cast<int>(rng() % 7);
        double p = static_cast<double>(5 + rng() % 91) / 100.0;
        Hypergraph g = make_random(n, 3, p, rng());
        const std::uint64_t bound = ipow(static_cast<std::uint64_t>(n), 4) + 64;
        for (Orientation o : {Orientation::IndependentFirst, Orientation::CliqueFirst}) {
            PartitionList list = enumerate_sparse_dense(g, o);
            std::uint64_t expect = brute_sd_count(g, o);
            bool sorted = std::is_sorted(list.begin(), list.end()) &&
                          std::adjacent_find(list.begin(), list.end()) == list.end();
            bool members_ok = true;
            for (const Bipartition& q : list) {
                const auto indep = o == Orientation::IndependentFirst ? q.v1_members() : q.v2_members();
                const auto cliq = o == Orientation::IndependentFirst ? q.v2_members() : q.v1_members();
                if (!is_independent(g, indep) || !is_clique(g, cliq)) members_ok = false;
            }
            if (list.size() != expect || !sorted || !members_ok || list.size() > bound) {
                pass = false;
                log << "FAIL sparse-dense case " << i << ": got " << list.size() << " partitions, oracle "
                    << expect << ", bound " << bound << (sorted ? "" : ", unsorted")
                    << (members_ok ? "" : ", invalid member") << "\n";
                dump_instance(log, g, PiVector::parse("0**0"));
            }
        }
    }
    return {pass, count};
}

// ---- mixed ---------------------------------------------------------------

SuiteResult suite_mixed(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 200;
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int k = 3 + static_cast<int>(rng() % 2);
        int n = 4 + static_cast<int>(rng() % 6);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        Hypergraph g = make_random(n, k, p, rng());
        PiVector pi = PiVector::parse("00");
        for (;;) {
            std::vector<Mark> e;
            for (int j = 0; j <= k; ++j)
                e.push_back(static_cast<Mark>(rng() % 3));
            PiVector candidate{std::move(e)};
            if (candidate.has_both_zero_and_one() &&
                !(candidate.at(0) == Mark::Star && candidate.at(k) == Mark::Star)) {
                pi = std::move(candidate);
                break;
            }
        }
        PartitionList got = solve_mixed(g, pi);
        PartitionList expect = brute_force_all(g, pi, opt.max_n);
        std::uint64_t bound = ipow(static_cast<std::uint64_t>(n), 3 * k);
        if (got != expect || got.size() > bound) {
            pass = false;
            log << "FAIL mixed case " << i << ": got " << got.size() << " partitions, oracle "
                << expect.size() << ", bound " << bound << "\n";
            dump_instance(log, g, pi);
        }
    }
    return {pass, count};
}

// ---- alternating ----------------------------------------------------------

PiVector alternating_pattern(int k) {
    std::vector<Mark> e;
    for (int i = 0; i <= k; ++i) e.push_back(i % 2 == 0 ? Mark::Zero : Mark::Star);
    return PiVector{std::move(e)};
}

SuiteResult suite_alternating(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 200;
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int k = 3 + static_cast<int>(rng() % 2);
        int n = 4 + static_cast<int>(rng() % 9);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        Hypergraph g = make_random(n, k, p, rng());
        PiVector pi = alternating_pattern(k);
        auto got = solve_alternating(g, pi);
        auto expect = brute_force_first(g, pi, opt.max_n);
        if (got.has_value() != expect.has_value()) {
            pass = false;
            log << "FAIL alternating case " << i << ": solver says " << (got ? "yes" : "no")
                << ", oracle says " << (expect ? "yes" : "no") << "\n";
            dump_instance(log, g, pi);
        }
    }
    return {pass, count};
}

// ---- sat -------------------------------------------------------------------

SuiteResult suite_sat(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 100;
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        CnfFormula phi;
        phi.num_vars = 1 + static_cast<int>(rng() % 4);
        int clauses = 1 + static_cast<int>(rng() % 6);
        for (int j = 0; j < clauses; ++j) {
            std::array<int, 3> c;
            for (auto& lit : c) {
                int var = 1 + static_cast<int>(rng() % phi.num_vars);
                lit = (rng() % 2) ? var : -var;
            }
            phi.clauses.push_back(c);
        }
        bool sat = cnf_satisfiable(phi);

        PreprocessedCnf pre = preprocess_cnf(phi);
        bool reduced_yes;
        std::string detail;
        if (pre.status == CnfStatus::TriviallyTrue) {
            reduced_yes = true;
            detail = "trivially true";
        } else if (pre.status == CnfStatus::TriviallyFalse) {
            reduced_yes = false;
            detail = "trivially false";
        } else {
            ReductionRecord rec = reduce_sat(pre.formula);
            auto partition = backtrack_first(rec.output, rec.output_pi);
            reduced_yes = partition.has_value();
            if (partition) {
                std::vector<bool> a = pull_back_sat(rec, *partition); // throws when unsatisfying
                for (int lit : pre.forced) a[static_cast<std::size_t>(std::abs(lit)) - 1] = lit > 0;
                if (!eval_cnf(phi, a)) {
                    pass = false;
                    log << "FAIL sat case " << i << ": extended pull-back does not satisfy the input\n"
                        << serialize_dimacs(phi);
                }
            }
        }
        if (reduced_yes != sat) {
            pass = false;
            log << "FAIL sat case " << i << ": formula " << (sat ? "satisfiable" : "unsatisfiable")
                << " but reduction says " << (reduced_yes ? "yes" : "no") << " " << detail << "\n"
                << serialize_dimacs(phi);
        }
    }
    return {pass, count};
}

// ---- lift reductions ---------------------------------------------------------

// Shared harness: build the record, compare input/output decisions, pull back
// every (or up to `cap`) output partition and validate it on the input.
template <class Build>
bool lift_case(std::ostream& log, const char* name, int index, const Hypergraph& g,
               const PiVector& pi, Build&& build, bool output_by_brute, int max_n,
               std::size_t cap = static_cast<std::size_t>(-1)) {
    ReductionRecord rec = build(g, pi);
    bool in_yes = brute_force_first(g, pi, max_n).has_value();
    PartitionList out;
    bool truncated = false;
    if (output_by_brute)
        out = brute_force_all(rec.output, rec.output_pi, max_n);
    else
        out = backtrack_all(rec.output, rec.output_pi, cap, &truncated);
    bool out_yes = !out.empty();
    bool ok = in_yes == out_yes;
    if (!ok) {
        log << "FAIL " << name << " case " << index << ": input " << (in_yes ? "yes" : "no")
            << " but output " << (out_yes ? "yes" : "no") << "\n";
        dump_instance(log, g, pi);
        return false;
    }
    for (const Bipartition& q : out) {
        Bipartition back = pull_back(rec, q);
        if (check_partition(g, pi, back)) {
            log << "FAIL " << name << " case " << index << ": pull-back of " << q.to_string()
                << " gives invalid " << back.to_string() << "\n";
            dump_instance(log, g, pi);
            return false;
        }
    }
    return true;
}

SuiteResult suite_sigma(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 50;
    const char* pis[] = {"0*00", "00*0", "0**0"};
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 2 + static_cast<int>(rng() % 4);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        PiVector pi = PiVector::parse(pis[rng() % 3]);
        Hypergraph g = make_random(n, 3, p, rng());
        pass &= lift_case(log, "sigma", i, g, pi,
                          [](const Hypergraph& h, const PiVector& q) { return sigma_lift(h, q); },
                          /*output_by_brute=*/true, opt.max_n);
    }
    return {pass, count};
}

SuiteResult suite_double(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 50;
    const char* pis[] = {"0*00", "00*0", "0**0"};
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 1 + static_cast<int>(rng() % 5);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        PiVector pi = PiVector::parse(pis[rng() % 3]);
        Hypergraph g = make_random(n, 3, p, rng());
        // The doubled instance has 11n vertices; enumerate it exactly but cap
        // the number of pulled-back partitions.
        pass &= lift_case(log, "double", i, g, pi,
                          [](const Hypergraph& h, const PiVector& q) { return double_up(h, q); },
                          /*output_by_brute=*/false, opt.max_n, 500);
    }
    return {pass, count};
}

SuiteResult suite_prepend0(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 50;
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 1 + static_cast<int>(rng() % 5);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        // Alternate the palindromic branch (0*00 -> A) and the gadget branch
        // (00*0 -> B).
        PiVector pi = PiVector::parse(i % 2 == 0 ? "0*00" : "00*0");
        char want_branch = i % 2 == 0 ? 'A' : 'B';
        Hypergraph g = make_random(n, 3, p, rng());
        ReductionRecord probe = prepend_zero(g, pi);
        if (probe.branch != want_branch) {
            pass = false;
            log << "FAIL prepend0 case " << i << ": expected branch " << want_branch << ", got "
                << probe.branch << "\n";
            continue;
        }
        pass &= lift_case(log, "prepend0", i, g, pi,
                          [](const Hypergraph& h, const PiVector& q) { return prepend_zero(h, q); },
                          /*output_by_brute=*/true, std::max(opt.max_n, n + 10));
    }
    return {pass, count};
}

// ---- tables -----------------------------------------------------------------

bool replay_ok(const PiVector& query, const ComplexityVerdict& v) {
    if (v.derivation.empty()) return false;
    if (v.status == Complexity::NPComplete) {
        PiVector cur = v.derivation.front().from;
        for (const DerivationStep& s : v.derivation) {
            if (s.from != cur) return false;
            cur = apply_rule(s.rule, cur);
            if (cur != s.to) return false;
        }
        return cur == query;
    }
    for (std::size_t i = 1; i < v.derivation.size(); ++i)
        if (v.derivation[i].from != v.derivation[i - 1].to) return false;
    return v.derivation.front().from == query;
}

SuiteResult suite_tables(const SuiteOptions&, std::ostream& log) {
    struct Expect {
        int length;
        std::set<std::string> npc;
        std::set<std::string> open;
    };
    auto orbit_of = [](const std::vector<PiVector>& list) {
        std::set<std::string> out;
        for (const PiVector& v : list) {
            out.insert(v.to_string());
            out.insert(v.reversed().to_string());
            out.insert(v.complemented().to_string());
            out.insert(v.complemented().reversed().to_string());
        }
        return out;
    };
    std::vector<Expect> plan;
    plan.push_back({4, orbit_of(npc_k3()), {}});
    plan.push_back({5, orbit_of(npc_k4()), {}});
    plan.push_back({6, orbit_of(npc_k5()), orbit_of(open_k5())});

    bool pass = true;
    int cases = 0;
    for (const Expect& ex : plan) {
        const int total = static_cast<int>(ipow(3, ex.length));
        for (int code = 0; code < total; ++code) {
            ++cases;
            int c = code;
            std::vector<Mark> entries;
            for (int i = 0; i < ex.length; ++i) {
                entries.push_back(static_cast<Mark>(c % 3));
                c /= 3;
            }
            PiVector pi{std::move(entries)};
            ComplexityVerdict verdict = classify(pi);
            Complexity want = ex.npc.count(pi.to_string())    ? Complexity::NPComplete
                              : ex.open.count(pi.to_string()) ? Complexity::Open
                                                              : Complexity::Polynomial;
            if (verdict.status != want) {
                pass = false;
                log << "FAIL tables: " << pi.to_string() << " classified "
                    << complexity_name(verdict.status) << ", expected " << complexity_name(want)
                    << "\n";
            } else if (!replay_ok(pi, verdict)) {
                pass = false;
                log << "FAIL tables: derivation for " << pi.to_string() << " does not replay\n";
            }
        }
    }
    return {pass, cases};
}

// ---- exact cover ---------------------------------------------------------------

SuiteResult suite_xc(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 50;
    const PiVector pi = PiVector::parse("0*00");
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 4 + static_cast<int>(rng() % 6);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        Hypergraph g = make_random(n, 3, p, rng());
        ExactCoverInstance inst = to_exact_cover(g);
        std::uint64_t covers = count_exact_covers(inst);
        std::uint64_t partitions = brute_force_all(g, pi, opt.max_n).size();
        bool round_trip = from_exact_cover(inst) == g;
        if (covers != partitions || !round_trip) {
            pass = false;
            log << "FAIL xc case " << i << ": " << covers << " covers vs " << partitions
                << " partitions" << (round_trip ? "" : ", round trip broken") << "\n";
            dump_instance(log, g, pi);
        }
    }
    return {pass, count};
}

// ---- symmetry --------------------------------------------------------------------

SuiteResult suite_symmetry(const SuiteOptions& opt, std::ostream& log) {
    const int count = opt.count > 0 ? opt.count : 500;
    bool pass = true;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 2 + static_cast<int>(rng() % 7);
        int k = 2 + static_cast<int>(rng() % 3);
        double p = static_cast<double>(10 + rng() % 81) / 100.0;
        Hypergraph g = make_random(n, k, p, rng());
        std::vector<Mark> entries;
        for (int j = 0; j <= k; ++j) entries.push_back(static_cast<Mark>(rng() % 3));
        PiVector pi{std::move(entries)};
        std::vector<Side> side;
        for (int v = 0; v < n; ++v) side.push_back(rng() % 2 ? Side::One : Side::Two);
        Bipartition part{std::move(side)};

        bool base = !check_partition(g, pi, part).has_value();
        bool comp = !check_partition(complement_hypergraph(g), pi.complemented(), part).has_value();
        bool rev = !check_partition(g, pi.reversed(), part.swapped()).has_value();
        if (base != comp || base != rev) {
            pass = false;
            log << "FAIL symmetry case " << i << ": base " << base << " complement " << comp
                << " reversal " << rev << " for partition " << part.to_string() << "\n";
            dump_instance(log, g, pi);
        }
    }
    return {pass, count};
}

// ---- the two pinned gadget facts ----------------------------------------------------

SuiteResult suite_gadget(const SuiteOptions& opt, std::ostream& log) {
    Hypergraph h(4, 3, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    PartitionList all = brute_force_all(h, PiVector::parse("0*00"), opt.max_n);
    bool pass = all.size() == 1 && all[0] == Bipartition::parse("2221");
    if (!pass) {
        log << "FAIL gadget: expected the single partition 2221, got " << all.size() << " items\n";
        for (const Bipartition& p : all) log << "  " << p.to_string() << "\n";
    }
    return {pass, 1};
}

SuiteResult suite_cycle(const SuiteOptions& opt, std::ostream& log) {
    PartitionList all = brute_force_all(make_cycle(6, 3), PiVector::parse("0*00"), opt.max_n);
    PartitionList want = {Bipartition::parse("122122"), Bipartition::parse("212212"),
                          Bipartition::parse("221221")};
    bool pass = all == want;
    if (!pass) {
        log << "FAIL cycle: expected the three antipodal partitions, got " << all.size() << " items\n";
        for (const Bipartition& p : all) log << "  " << p.to_string() << "\n";
    }
    return {pass, 1};
}

} // namespace

const std::vector<std::string>& cli_suite_names() {
    static const std::vector<std::string> names = {"sparse-dense", "mixed",  "alternating", "sat",
                                                   "sigma",        "double", "prepend0",    "tables"};
    return names;
}

bool is_suite(const std::string& name) {
    static const std::vector<std::string> all = {"sparse-dense", "mixed",    "alternating", "sat",
                                                 "sigma",        "double",   "prepend0",    "tables",
                                                 "xc",           "symmetry", "gadget",      "cycle"};
    return std::find(all.begin(), all.end(), name) != all.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt, std::ostream& log) {
    if (name == "sparse-dense") return suite_sparse_dense(opt, log);
    if (name == "mixed") return suite_mixed(opt, log);
    if (name == "alternating") return suite_alternating(opt, log);
    if (name == "sat") return suite_sat(opt, log);
    if (name == "sigma") return suite_sigma(opt, log);
    if (name == "double") return suite_double(opt, log);
    if (name == "prepend0") return suite_prepend0(opt, log);
    if (name == "tables") return suite_tables(opt, log);
    if (name == "xc") return suite_xc(opt, log);
    if (name == "symmetry") return suite_symmetry(opt, log);
    if (name == "gadget") return suite_gadget(opt, log);
    if (name == "cycle") return suite_cycle(opt, log);
    throw UsageError("unknown suite '" + name + "'");
}

} // namespace pipart
