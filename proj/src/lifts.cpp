#include "pipart/reduce/lifts.hpp"

#include <string>

#include "pipart/check.hpp"
#include "pipart/classify/pi_rules.hpp"
#include "pipart/errors.hpp"

namespace pipart {

namespace {

void require_normalized_one_free(const PiVector& pi, const char* what) {
    if (!pi.is_one_free())
        throw ApplicabilityError(std::string(what) + ": pattern must be one-free");
    if (pi.at(0) != Mark::Zero || pi.at(pi.k()) != Mark::Zero)
        throw ApplicabilityError(std::string(what) + ": pattern must have Zero at both ends");
    if (!pi.contains(Mark::Star))
        throw ApplicabilityError(std::string(what) + ": pattern must contain a Star");
}

void require_uniformity(const Hypergraph& g, const PiVector& pi, const char* what) {
    if (pi.k() != g.k())
        throw ApplicabilityError(std::string(what) + ": pattern does not match hypergraph uniformity");
}

} // namespace

ReductionRecord sigma_lift(const Hypergraph& g, const PiVector& pi) {
    require_uniformity(g, pi, "sigma_lift");
    require_normalized_one_free(pi, "sigma_lift");
    if (!sigma_applicable(pi))
        throw ApplicabilityError("sigma_lift: pattern has a *0* window, the apex argument fails");

    const int k = g.k();
    const int n = g.n();
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * static_cast<std::size_t>(k + 1) + 1);
    Edge apexes;
    for (int i = 0; i < k + 1; ++i) apexes.push_back(n + i);
    for (const Edge& e : g.edges()) {
        for (int i = 0; i < k + 1; ++i) {
            Edge lifted(e);
            lifted.push_back(n + i);
            edges.push_back(std::move(lifted));
        }
    }
    edges.push_back(apexes);

    ReductionRecord rec;
    rec.kind = ReductionKind::SigmaLift;
    rec.output = Hypergraph(n + k + 1, k + 1, std::move(edges));
    rec.output_pi = sigma(pi);
    rec.input_pi = pi;
    rec.input_n = n;
    for (int v = 0; v < n; ++v) rec.roles.push_back("orig:" + std::to_string(v));
    for (int i = 1; i <= k + 1; ++i) rec.roles.push_back("apex:" + std::to_string(i));
    return rec;
}

ReductionRecord blowup(const Hypergraph& g, const PiVector& pi, const std::vector<int>& copies,
                       const PiVector& pi_out) {
    require_uniformity(g, pi, "blowup");
    require_normalized_one_free(pi, "blowup");
    if (!pi_out.is_one_free()) throw ApplicabilityError("blowup: target pattern must be one-free");
    if (pi_out.has_consecutive_stars())
        throw ApplicabilityError("blowup: target pattern has consecutive Stars");
    if (!pi_out.contains(Mark::Star))
        throw ApplicabilityError("blowup: target pattern must contain a Star");
    if (auto bad = blowup_incompatibility(pi, copies, pi_out))
        throw ApplicabilityError("blowup: " + *bad);

    const int n = g.n();
    const int kp = pi_out.k();
    const int block = 2 * kp - 1; // k' copies + k'-1 anchors per vertex
    auto copy_id = [&](int u, int i) { return u * block + (i - 1); };        // i in 1..k'
    auto anchor_id = [&](int u, int i) { return u * block + kp + (i - 1); }; // i in 1..k'-1

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int i = 1; i <= kp; ++i) {
            Edge e;
            for (int a = 1; a <= kp - 1; ++a) e.push_back(anchor_id(u, a));
            e.push_back(copy_id(u, i));
            edges.push_back(std::move(e));
        }
    }
    for (const Edge& in : g.edges()) {
        Edge e;
        for (std::size_t m = 0; m < in.size(); ++m)
            for (int i = 1; i <= copies[m]; ++i) e.push_back(copy_id(in[m], i));
        edges.push_back(std::move(e));
    }

    ReductionRecord rec;
    rec.kind = ReductionKind::Blowup;
    rec.output = Hypergraph(n * block, kp, std::move(edges));
    rec.output_pi = pi_out;
    rec.input_pi = pi;
    rec.input_n = n;
    rec.copies = copies;
    rec.roles.resize(static_cast<std::size_t>(n * block));
    for (int u = 0; u < n; ++u) {
        for (int i = 1; i <= kp; ++i)
            rec.roles[static_cast<std::size_t>(copy_id(u, i))] =
                "copy:" + std::to_string(u) + ":" + std::to_string(i);
        for (int i = 1; i <= kp - 1; ++i)
            rec.roles[static_cast<std::size_t>(anchor_id(u, i))] =
                "anchor:" + std::to_string(u) + ":" + std::to_string(i);
    }
    return rec;
}

ReductionRecord double_up(const Hypergraph& g, const PiVector& pi) {
    return blowup(g, pi, std::vector<int>(static_cast<std::size_t>(pi.k()), 2),
                  interleave_with_zeros(pi));
}

ReductionRecord prepend_zero(const Hypergraph& g, const PiVector& pi) {
    require_uniformity(g, pi, "prepend_zero");
    if (!pi.is_one_free()) throw ApplicabilityError("prepend_zero: pattern must be one-free");
    auto plan = plan_prepend_zero(pi);
    if (!plan)
        throw ApplicabilityError(
            "prepend_zero: (0,pi) is not palindromic and no split position m has pi_m = * with "
            "pi_{k-m-1} = 0 (a Star-ended pattern is trivial anyway)");

    const int k = g.k();
    const int n = g.n();
    std::vector<Mark> out_entries{Mark::Zero};
    out_entries.insert(out_entries.end(), pi.entries().begin(), pi.entries().end());

    ReductionRecord rec;
    rec.kind = ReductionKind::PrependZero;
    rec.output_pi = PiVector(std::move(out_entries));
    rec.input_pi = pi;
    rec.input_n = n;
    rec.branch = plan->branch;
    rec.branch_m = plan->m;

    if (plan->branch == 'A') {
        const int u = n;
        std::vector<Edge> edges;
        edges.reserve(g.edge_count());
        for (const Edge& e : g.edges()) {
            Edge lifted(e);
            lifted.push_back(u);
            edges.push_back(std::move(lifted));
        }
        rec.output = Hypergraph(n + 1, k + 1, std::move(edges));
        for (int v = 0; v < n; ++v) rec.roles.push_back("orig:" + std::to_string(v));
        rec.roles.push_back("univ");
        return rec;
    }

    const int m = plan->m;
    auto u_id = [&](int i) { return n + (i - 1); };          // i in 1..2k
    auto w_id = [&](int i) { return n + 2 * k + (i - 1); };  // i in 1..k+1
    std::vector<Edge> edges;
    for (int i = 1; i <= m + 1; ++i) {
        Edge e;
        for (int t = 1; t <= k; ++t) e.push_back(u_id(t));
        e.push_back(w_id(i));
        edges.push_back(std::move(e));
    }
    for (int i = m + 2; i <= k + 1; ++i) {
        Edge e;
        for (int t = k + 1; t <= 2 * k; ++t) e.push_back(u_id(t));
        e.push_back(w_id(i));
        edges.push_back(std::move(e));
    }
    for (const Edge& in : g.edges()) {
        Edge e(in);
        e.push_back(w_id(1));
        edges.push_back(std::move(e));
    }
    {
        Edge e;
        for (int i = 1; i <= k + 1; ++i) e.push_back(w_id(i));
        edges.push_back(std::move(e));
    }
    rec.output = Hypergraph(n + 3 * k + 1, k + 1, std::move(edges));
    for (int v = 0; v < n; ++v) rec.roles.push_back("orig:" + std::to_string(v));
    for (int i = 1; i <= 2 * k; ++i) rec.roles.push_back("u:" + std::to_string(i));
    for (int i = 1; i <= k + 1; ++i) rec.roles.push_back("w:" + std::to_string(i));
    return rec;
}

Bipartition pull_back(const ReductionRecord& rec, const Bipartition& p) {
    if (check_partition(rec.output, rec.output_pi, p))
        throw ApplicabilityError("pull_back: partition is not valid for the output instance");

    switch (rec.kind) {
    case ReductionKind::SigmaLift:
    case ReductionKind::PrependZero: {
        if (rec.kind == ReductionKind::PrependZero && rec.branch == 'A') {
            const int u = rec.input_n;
            std::vector<Side> side;
            side.reserve(static_cast<std::size_t>(rec.input_n));
            for (int v = 0; v < rec.input_n; ++v)
                side.push_back(p.in_v1(v) ? Side::One : Side::Two);
            Bipartition q{std::move(side)};
            // With the universal vertex on side two the restriction solves the
            // reversed pattern, which equals pi here; swap the sides back.
            return p.in_v1(u) ? q : q.swapped();
        }
        std::vector<Side> side;
        side.reserve(static_cast<std::size_t>(rec.input_n));
        for (int v = 0; v < rec.input_n; ++v) side.push_back(p.in_v1(v) ? Side::One : Side::Two);
        return Bipartition{std::move(side)};
    }
    case ReductionKind::Blowup: {
        const int block = 2 * rec.output_pi.k() - 1;
        std::vector<Side> side;
        side.reserve(static_cast<std::size_t>(rec.input_n));
        for (int u = 0; u < rec.input_n; ++u)
            side.push_back(p.in_v1(u * block) ? Side::One : Side::Two); // first copy decides
        return Bipartition{std::move(side)};
    }
    case ReductionKind::Sat3:
        throw ApplicabilityError("pull_back: sat records decode to assignments, use pull_back_sat");
    }
    throw InternalError("pull_back: unhandled reduction kind");
}

} // namespace pipart
