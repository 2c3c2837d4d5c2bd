#include "pipart/classify/classify.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "pipart/classify/pi_rules.hpp"
#include "pipart/classify/tables.hpp"
#include "pipart/errors.hpp"

namespace pipart {

std::string complexity_name(Complexity c) {
    switch (c) {
    case Complexity::Polynomial: return "Polynomial";
    case Complexity::NPComplete: return "NPComplete";
    case Complexity::Open: return "Open";
    }
    return "?";
}

NormalizationLog normalize(const PiVector& pi) {
    NormalizationLog log{false, false, pi};
    if (!log.result.contains(Mark::Zero) && log.result.contains(Mark::One)) {
        log.result = log.result.complemented();
        log.complemented = true;
    }
    PiVector rev = log.result.reversed();
    if (rev < log.result) {
        log.result = std::move(rev);
        log.reversed = true;
    }
    return log;
}

namespace {

const PiVector& base_two_coloring() {
    static const PiVector v = PiVector::parse("0**0");
    return v;
}
const PiVector& base_sat() {
    static const PiVector v = PiVector::parse("0*00");
    return v;
}

bool zero_ended_with_star(const PiVector& v) {
    return v.at(0) == Mark::Zero && v.at(v.k()) == Mark::Zero && v.contains(Mark::Star);
}

std::set<std::string> normalized_set(const std::vector<PiVector>& list) {
    std::set<std::string> out;
    for (const PiVector& v : list) out.insert(normalize(v).result.to_string());
    return out;
}

const std::set<std::string>& normalized_npc(int k) {
    static const std::set<std::string> k3 = normalized_set(npc_k3());
    static const std::set<std::string> k4 = normalized_set(npc_k4());
    static const std::set<std::string> k5 = normalized_set(npc_k5());
    switch (k) {
    case 3: return k3;
    case 4: return k4;
    default: return k5;
    }
}

const std::set<std::string>& normalized_open_k5() {
    static const std::set<std::string> s = normalized_set(open_k5());
    return s;
}

} // namespace

PiVector apply_rule(const std::string& rule, const PiVector& from) {
    auto require = [&](bool cond, const std::string& why) {
        if (!cond)
            throw ApplicabilityError("rule '" + rule + "' does not apply to " + from.to_string() +
                                     ": " + why);
    };
    if (rule == "complement") return from.complemented();
    if (rule == "reverse") return from.reversed();
    if (rule == "sigma") {
        require(from.is_one_free(), "pattern contains a One");
        require(zero_ended_with_star(from), "needs zero ends and at least one Star");
        require(sigma_applicable(from), "a *0* window blocks the apex argument");
        return sigma(from);
    }
    if (rule == "double") {
        require(from.is_one_free(), "pattern contains a One");
        require(zero_ended_with_star(from), "needs zero ends and at least one Star");
        return interleave_with_zeros(from);
    }
    if (rule == "prepend-zero") {
        require(plan_prepend_zero(from).has_value(), "neither prepend branch applies");
        std::vector<Mark> e{Mark::Zero};
        e.insert(e.end(), from.entries().begin(), from.entries().end());
        return PiVector(std::move(e));
    }
    if (rule == "append-zero") {
        require(plan_prepend_zero(from.reversed()).has_value(),
                "neither prepend branch applies to the reversal");
        std::vector<Mark> e(from.entries());
        e.push_back(Mark::Zero);
        return PiVector(std::move(e));
    }
    if (rule == "base-two-coloring") {
        require(from == base_two_coloring(), "base vector mismatch");
        return from;
    }
    if (rule == "base-sat") {
        require(from == base_sat(), "base vector mismatch");
        return from;
    }
    if (rule == "table-k3" || rule == "table-k4" || rule == "table-k5") {
        int k = rule.back() - '0';
        require(from.k() == k && normalized_npc(k).count(normalize(from).result.to_string()) != 0,
                "vector is not in that table");
        return from;
    }
    // Discharge markers carry no transformation.
    if (rule == "small-k" || rule == "trivial-end" || rule == "both-values" || rule == "all-zero" ||
        rule == "alternating" || rule == "table-k5-open" || rule == "search-exhausted")
        return from;
    throw ApplicabilityError("unknown rule '" + rule + "'");
}

std::optional<std::vector<DerivationStep>> derive_npc_chain(const PiVector& target, int depth) {
    struct Node {
        PiVector pi;
        int parent;
        std::string rule;
        int depth;
    };
    const std::string goal = target.to_string();
    const int max_len = target.size();

    std::vector<Node> nodes;
    std::map<std::string, int> seen;
    std::deque<int> queue;
    auto add = [&](const PiVector& v, int parent, const std::string& rule, int d) {
        if (v.size() > max_len) return;
        std::string key = v.to_string();
        if (seen.count(key)) return;
        seen[key] = static_cast<int>(nodes.size());
        nodes.push_back(Node{v, parent, rule, d});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
    };
    add(base_sat(), -1, "base-sat", 0);
    add(base_two_coloring(), -1, "base-two-coloring", 0);

    int found = -1;
    if (seen.count(goal)) found = seen[goal];
    while (found < 0 && !queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        if (nodes[static_cast<std::size_t>(id)].depth == depth) continue;
        const PiVector x = nodes[static_cast<std::size_t>(id)].pi;
        const int d = nodes[static_cast<std::size_t>(id)].depth + 1;

        add(x.reversed(), id, "reverse", d);
        if (sigma_applicable(x)) add(sigma(x), id, "sigma", d);
        add(interleave_with_zeros(x), id, "double", d);
        if (plan_prepend_zero(x)) {
            std::vector<Mark> e{Mark::Zero};
            e.insert(e.end(), x.entries().begin(), x.entries().end());
            add(PiVector(std::move(e)), id, "prepend-zero", d);
        }
        if (plan_prepend_zero(x.reversed())) {
            std::vector<Mark> e(x.entries());
            e.push_back(Mark::Zero);
            add(PiVector(std::move(e)), id, "append-zero", d);
        }
        auto it = seen.find(goal);
        if (it != seen.end()) found = it->second;
    }
    if (found < 0) return std::nullopt;

    std::vector<DerivationStep> chain;
    for (int id = found; id >= 0; id = nodes[static_cast<std::size_t>(id)].parent) {
        const Node& nd = nodes[static_cast<std::size_t>(id)];
        if (nd.parent < 0)
            chain.push_back({nd.rule, nd.pi, nd.pi});
        else
            chain.push_back({nd.rule, nodes[static_cast<std::size_t>(nd.parent)].pi, nd.pi});
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

namespace {

std::vector<DerivationStep> normalization_steps(const PiVector& pi, const NormalizationLog& log) {
    std::vector<DerivationStep> steps;
    PiVector cur = pi;
    if (log.complemented) {
        PiVector next = cur.complemented();
        steps.push_back({"complement", cur, next});
        cur = std::move(next);
    }
    if (log.reversed) {
        PiVector next = cur.reversed();
        steps.push_back({"reverse", cur, next});
        cur = std::move(next);
    }
    return steps;
}

// Continues an NP-completeness chain from the normalized vector back to the
// original query by undoing the normalization (both moves preserve hardness).
void append_denormalization(std::vector<DerivationStep>& chain, const PiVector& normalized,
                            const NormalizationLog& log, const PiVector& original) {
    PiVector cur = normalized;
    if (log.reversed) {
        PiVector next = cur.reversed();
        chain.push_back({"reverse", cur, next});
        cur = std::move(next);
    }
    if (log.complemented) {
        PiVector next = cur.complemented();
        chain.push_back({"complement", cur, next});
        cur = std::move(next);
    }
    if (cur != original) throw InternalError("denormalization did not reach the query vector");
}

} // namespace

ComplexityVerdict classify(const PiVector& pi, int search_depth) {
    const int k = pi.k();
    if (k <= 2) return {Complexity::Polynomial, {{"small-k", pi, pi}}};
    if (pi.at(0) == Mark::Star || pi.at(k) == Mark::Star)
        return {Complexity::Polynomial, {{"trivial-end", pi, pi}}};
    if (pi.has_both_zero_and_one())
        return {Complexity::Polynomial, {{"both-values", pi, pi}}};

    NormalizationLog log = normalize(pi);
    std::vector<DerivationStep> steps = normalization_steps(pi, log);
    const PiVector v = log.result;

    if (v.is_all_zero()) {
        steps.push_back({"all-zero", v, v});
        return {Complexity::Polynomial, std::move(steps)};
    }
    if (v.is_alternating()) {
        steps.push_back({"alternating", v, v});
        return {Complexity::Polynomial, std::move(steps)};
    }

    // Residual: one-free, zero ends, at least one Star, not alternating.
    auto chain = derive_npc_chain(v, search_depth);

    if (k <= 5) {
        if (k == 5 && normalized_open_k5().count(v.to_string()) != 0) {
            if (chain) throw InternalError("closure engine contradicts the k=5 table on " + v.to_string());
            steps.push_back({"table-k5-open", v, v});
            return {Complexity::Open, std::move(steps)};
        }
        if (normalized_npc(k).count(v.to_string()) == 0)
            throw InternalError("rule cascade left a vector outside the k=" + std::to_string(k) +
                                " table: " + v.to_string());
        std::vector<DerivationStep> d =
            chain ? std::move(*chain)
                  : std::vector<DerivationStep>{{"table-k" + std::to_string(k), v, v}};
        append_denormalization(d, v, log, pi);
        return {Complexity::NPComplete, std::move(d)};
    }

    if (chain) {
        std::vector<DerivationStep> d = std::move(*chain);
        append_denormalization(d, v, log, pi);
        return {Complexity::NPComplete, std::move(d)};
    }
    steps.push_back({"search-exhausted", v, v});
    return {Complexity::Open, std::move(steps)};
}

std::string verdict_report(const ComplexityVerdict& v) {
    std::ostringstream out;
    out << "verdict " << complexity_name(v.status) << '\n';
    for (const DerivationStep& s : v.derivation)
        out << "step " << s.rule << ' ' << s.from.to_string() << " -> " << s.to.to_string() << '\n';
    return out.str();
}

} // namespace pipart
