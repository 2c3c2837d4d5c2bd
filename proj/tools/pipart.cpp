// pipart - command-line front end: classify patterns, solve and verify
// instances, materialize reductions, generate graphs, run oracle suites.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pipart/classify/classify.hpp"
#include "pipart/errors.hpp"
#include "pipart/generate.hpp"
#include "pipart/io.hpp"
#include "pipart/reduce/exact_cover.hpp"
#include "pipart/reduce/lifts.hpp"
#include "pipart/reduce/sat_gadget.hpp"
#include "pipart/solve/solvers.hpp"
#include "pipart/suites.hpp"

namespace {

using namespace pipart;

struct Options {
    // classify
    std::string pi_text;
    int depth = 6;
    // solve / verify / enumerate
    std::string graph_file;
    std::string partition_text;
    bool all = false;
    bool first = false;
    int max_n = 24;
    std::size_t limit = 1000000;
    std::string orientation = "independent";
    std::string enum_mode;
    // reduce
    std::string reduce_kind;
    std::string input_file;
    std::string out_prefix = "reduced";
    // generate
    std::string gen_kind;
    int gen_a = 0, gen_b = 0;
    double gen_p = 0.5;
    std::uint64_t seed = 1;
    std::string out_file;
    // oracle-check
    std::string suite;
    int count = 0;
};

int run_classify(const Options& o) {
    ComplexityVerdict v = classify(PiVector::parse(o.pi_text), o.depth);
    std::cout << verdict_report(v);
    return 0;
}

int run_solve(const Options& o) {
    Hypergraph g = parse_hypergraph(read_text_file(o.graph_file));
    PiVector pi = PiVector::parse(o.pi_text);
    if (o.all) {
        bool truncated = false;
        PartitionList list = solve_all(g, pi, o.limit, &truncated, o.max_n);
        std::string method = pi.has_both_zero_and_one()
                                 ? (pi.at(0) == Mark::Star && pi.at(pi.k()) == Mark::Star
                                        ? "brute-force"
                                        : "mixed")
                                 : "fallback";
        std::cerr << "method " << method << "\n";
        for (const Bipartition& p : list) std::cout << p.to_string() << "\n";
        if (truncated) std::cout << "# truncated at " << o.limit << " partitions\n";
        return list.empty() ? 1 : 0;
    }
    Answer a = solve(g, pi);
    std::cerr << "method " << method_name(a.method) << "\n";
    if (!a.yes) return 1;
    std::cout << a.partition->to_string() << "\n";
    return 0;
}

int run_verify(const Options& o) {
    Hypergraph g = parse_hypergraph(read_text_file(o.graph_file));
    PiVector pi = PiVector::parse(o.pi_text);
    Bipartition p = Bipartition::parse(o.partition_text);
    auto violation = check_partition(g, pi, p);
    if (!violation) {
        std::cout << "VALID\n";
        return 0;
    }
    for (std::size_t i = 0; i < violation->witness.size(); ++i)
        std::cout << violation->witness[i] << ' ';
    std::cout << "count=" << violation->count_in_v1 << "\n";
    return 1;
}

void write_reduction(const Options& o, const ReductionRecord& rec) {
    write_text_file(o.out_prefix + ".hg", serialize_hypergraph(rec.output));
    write_text_file(o.out_prefix + ".rec", serialize_record(rec));
    std::cout << rec.output_pi.to_string() << "\n";
}

int run_reduce(const Options& o) {
    if (o.reduce_kind == "sat") {
        CnfFormula phi = parse_dimacs(read_text_file(o.input_file));
        write_reduction(o, reduce_sat(preprocess_cnf(phi)));
        return 0;
    }
    if (o.reduce_kind == "xc") {
        Hypergraph g = parse_hypergraph(read_text_file(o.input_file));
        ExactCoverInstance inst = to_exact_cover(g);
        write_text_file(o.out_prefix + ".xc", serialize_exact_cover(inst));
        std::string rec = "kind xc\npi 0*00\n";
        for (std::size_t s = 0; s < inst.sets.size(); ++s)
            rec += "v " + std::to_string(s) + " orig:" + std::to_string(s) + "\n";
        write_text_file(o.out_prefix + ".rec", rec);
        std::cout << "0*00\n";
        return 0;
    }
    if (o.reduce_kind == "from-xc") {
        ExactCoverInstance inst = parse_exact_cover(read_text_file(o.input_file));
        Hypergraph g = from_exact_cover(inst);
        write_text_file(o.out_prefix + ".hg", serialize_hypergraph(g));
        std::string rec = "kind from-xc\npi 0*00\n";
        for (int v = 0; v < g.n(); ++v)
            rec += "v " + std::to_string(v) + " set:" + std::to_string(v) + "\n";
        write_text_file(o.out_prefix + ".rec", rec);
        std::cout << "0*00\n";
        return 0;
    }
    Hypergraph g = parse_hypergraph(read_text_file(o.input_file));
    if (o.pi_text.empty()) throw UsageError("reduce " + o.reduce_kind + " needs a pattern argument");
    PiVector pi = PiVector::parse(o.pi_text);
    if (o.reduce_kind == "sigma") {
        write_reduction(o, sigma_lift(g, pi));
        return 0;
    }
    if (o.reduce_kind == "double") {
        write_reduction(o, double_up(g, pi));
        return 0;
    }
    if (o.reduce_kind == "prepend0") {
        write_reduction(o, prepend_zero(g, pi));
        return 0;
    }
    throw UsageError("unknown reduce kind '" + o.reduce_kind + "'");
}

int run_generate(const Options& o) {
    Hypergraph g = [&] {
        if (o.gen_kind == "cycle") return make_cycle(o.gen_a, o.gen_b);
        if (o.gen_kind == "complete") return make_complete(o.gen_a, o.gen_b);
        if (o.gen_kind == "empty") return make_empty(o.gen_a, o.gen_b);
        if (o.gen_kind == "random") return make_random(o.gen_a, o.gen_b, o.gen_p, o.seed);
        throw UsageError("unknown generator '" + o.gen_kind + "'");
    }();
    std::string text = serialize_hypergraph(g);
    if (o.out_file.empty())
        std::cout << text;
    else
        write_text_file(o.out_file, text);
    return 0;
}

int run_enumerate(const Options& o) {
    Hypergraph g = parse_hypergraph(read_text_file(o.graph_file));
    PartitionList list;
    if (o.enum_mode == "sparse-dense") {
        Orientation orient;
        if (o.orientation == "independent")
            orient = Orientation::IndependentFirst;
        else if (o.orientation == "clique")
            orient = Orientation::CliqueFirst;
        else
            throw UsageError("orientation must be 'independent' or 'clique'");
        list = enumerate_sparse_dense(g, orient);
    } else if (o.enum_mode == "pi01") {
        if (o.pi_text.empty()) throw UsageError("enumerate pi01 needs a pattern argument");
        list = enumerate_pi_01(g, PiVector::parse(o.pi_text));
    } else {
        throw UsageError("unknown enumerate mode '" + o.enum_mode + "'");
    }
    std::size_t shown = 0;
    for (const Bipartition& p : list) {
        if (shown == o.limit) {
            std::cout << "# truncated at " << o.limit << " partitions\n";
            break;
        }
        std::cout << p.to_string() << "\n";
        ++shown;
    }
    return list.empty() ? 1 : 0;
}

int run_oracle_check(const Options& o) {
    const auto& names = cli_suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw UsageError("unknown suite '" + o.suite + "'");
    SuiteOptions sopt;
    sopt.seed = o.seed;
    sopt.count = o.count;
    sopt.max_n = o.max_n;
    SuiteResult r = run_suite(o.suite, sopt, std::cout);
    if (r.pass) {
        std::cout << "ok " << o.suite << " (" << r.cases << " cases, seed " << o.seed << ")\n";
        return 0;
    }
    std::cout << "failed " << o.suite << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pi-partition problems on k-uniform hypergraphs"};
    app.require_subcommand(1);
    Options o;

    CLI::App* c_classify = app.add_subcommand("classify", "complexity verdict for a pattern");
    c_classify->add_option("pi", o.pi_text, "pattern over 01*")->required();
    c_classify->add_option("--depth", o.depth, "derivation search depth");

    CLI::App* c_solve = app.add_subcommand("solve", "find pi-partitions of a hypergraph");
    c_solve->add_option("file", o.graph_file)->required();
    c_solve->add_option("pi", o.pi_text)->required();
    c_solve->add_flag("--all", o.all, "enumerate all partitions");
    c_solve->add_flag("--first", o.first, "first partition only (default)");
    c_solve->add_option("--max-n", o.max_n, "brute-force vertex cap");
    c_solve->add_option("--limit", o.limit, "output line cap for --all");

    CLI::App* c_verify = app.add_subcommand("verify", "check a partition against a pattern");
    c_verify->add_option("file", o.graph_file)->required();
    c_verify->add_option("pi", o.pi_text)->required();
    c_verify->add_option("partition", o.partition_text)->required();

    CLI::App* c_reduce = app.add_subcommand("reduce", "materialize a reduction");
    c_reduce->add_option("kind", o.reduce_kind, "sat | sigma | double | prepend0 | xc | from-xc")
        ->required();
    c_reduce->add_option("input", o.input_file)->required();
    c_reduce->add_option("pi", o.pi_text, "input pattern (lift reductions)");
    c_reduce->add_option("--out", o.out_prefix, "output path prefix");

    CLI::App* c_generate = app.add_subcommand("generate", "write a generated hypergraph");
    c_generate->add_option("kind", o.gen_kind, "cycle | complete | empty | random")->required();
    c_generate->add_option("a", o.gen_a, "m (cycle) or n")->required();
    c_generate->add_option("k", o.gen_b, "uniformity")->required();
    c_generate->add_option("p", o.gen_p, "edge probability (random)");
    c_generate->add_option("--seed", o.seed);
    c_generate->add_option("-o,--output", o.out_file);

    CLI::App* c_enum = app.add_subcommand("enumerate", "polynomial enumerators");
    c_enum->add_option("mode", o.enum_mode, "sparse-dense | pi01")->required();
    c_enum->add_option("file", o.graph_file)->required();
    c_enum->add_option("pi", o.pi_text);
    c_enum->add_option("--orientation", o.orientation, "independent | clique");
    c_enum->add_option("--limit", o.limit);

    CLI::App* c_oracle = app.add_subcommand("oracle-check", "run an oracle-equivalence suite");
    c_oracle->add_option("suite", o.suite)->required();
    c_oracle->add_option("--seed", o.seed);
    c_oracle->add_option("--count", o.count);
    c_oracle->add_option("--max-n", o.max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return run_classify(o);
        if (c_solve->parsed()) return run_solve(o);
        if (c_verify->parsed()) return run_verify(o);
        if (c_reduce->parsed()) return run_reduce(o);
        if (c_generate->parsed()) return run_generate(o);
        if (c_enum->parsed()) return run_enumerate(o);
        if (c_oracle->parsed()) return run_oracle_check(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ApplicabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
