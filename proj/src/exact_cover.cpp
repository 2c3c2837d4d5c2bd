#include "pipart/reduce/exact_cover.hpp"

#include <algorithm>
#include <sstream>

#include "pipart/errors.hpp"

namespace pipart {

ExactCoverInstance to_exact_cover(const Hypergraph& g) {
    if (g.k() != 3) throw ApplicabilityError("to_exact_cover needs a 3-uniform hypergraph");
    ExactCoverInstance inst;
    inst.universe_size = static_cast<int>(g.edge_count());
    inst.sets.assign(static_cast<std::size_t>(g.n()), {});
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
        for (int v : g.edges()[ei]) inst.sets[static_cast<std::size_t>(v)].push_back(static_cast<int>(ei));
    return inst;
}

Hypergraph from_exact_cover(const ExactCoverInstance& inst) {
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(inst.universe_size));
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
        for (int x : inst.sets[s]) {
            if (x < 0 || x >= inst.universe_size)
                throw ApplicabilityError("from_exact_cover: element index out of range");
            holders[static_cast<std::size_t>(x)].push_back(static_cast<int>(s));
        }
    }
    std::vector<Edge> edges;
    edges.reserve(holders.size());
    for (std::size_t x = 0; x < holders.size(); ++x) {
        if (holders[x].size() != 3)
            throw ApplicabilityError("from_exact_cover: element " + std::to_string(x) + " lies in " +
                                     std::to_string(holders[x].size()) + " sets, exactly 3 required");
        edges.push_back(holders[x]);
    }
    return Hypergraph(static_cast<int>(inst.sets.size()), 3, std::move(edges));
}

namespace {

void count_rec(const ExactCoverInstance& inst, std::size_t s, std::vector<int>& uses,
               std::uint64_t& total) {
    if (s == inst.sets.size()) {
        for (int u : uses)
            if (u != 1) return;
        ++total;
        return;
    }
    // Skip set s.
    count_rec(inst, s + 1, uses, total);
    // Take set s unless it would cover something twice.
    for (int x : inst.sets[s])
        if (uses[static_cast<std::size_t>(x)] == 1) return;
    for (int x : inst.sets[s]) ++uses[static_cast<std::size_t>(x)];
    count_rec(inst, s + 1, uses, total);
    for (int x : inst.sets[s]) --uses[static_cast<std::size_t>(x)];
}

} // namespace

std::uint64_t count_exact_covers(const ExactCoverInstance& inst) {
    std::vector<int> uses(static_cast<std::size_t>(inst.universe_size), 0);
    std::uint64_t total = 0;
    count_rec(inst, 0, uses, total);
    return total;
}

ExactCoverInstance parse_exact_cover(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long long nx = -1, ns = -1;
    ExactCoverInstance inst;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        bool blank = start == std::string::npos;
        if (!blank && line[start] == '#') continue;
        if (nx < 0) {
            if (blank) continue;
            std::istringstream iss(line);
            std::string p, xc;
            if (!(iss >> p >> xc >> nx >> ns) || p != "p" || xc != "xc")
                throw ParseError("expected header 'p xc <|X|> <|S|>'", line_no);
            if (nx < 0 || ns < 0) throw ParseError("negative counts in header", line_no);
            inst.universe_size = static_cast<int>(nx);
            continue;
        }
        if (static_cast<long long>(inst.sets.size()) == ns) {
            if (blank) continue; // trailing blank lines
            throw ParseError("more set lines than declared in header", line_no);
        }
        std::istringstream iss(line);
        std::vector<int> set;
        long long x;
        while (iss >> x) {
            if (x < 0 || x >= nx)
                throw ParseError("element " + std::to_string(x) + " out of range [0, " +
                                     std::to_string(nx) + ")",
                                 line_no);
            set.push_back(static_cast<int>(x));
        }
        if (!iss.eof()) throw ParseError("invalid element index", line_no);
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw ParseError("duplicate element in set", line_no);
        inst.sets.push_back(std::move(set));
    }
    if (nx < 0) throw ParseError("missing header 'p xc <|X|> <|S|>'", line_no == 0 ? 1 : line_no);
    if (static_cast<long long>(inst.sets.size()) != ns)
        throw ParseError("header declares " + std::to_string(ns) + " sets but " +
                             std::to_string(inst.sets.size()) + " were given",
                         line_no == 0 ? 1 : line_no);
    return inst;
}

std::string serialize_exact_cover(const ExactCoverInstance& inst) {
    std::ostringstream out;
    out << "p xc " << inst.universe_size << ' ' << inst.sets.size() << '\n';
    for (const auto& set : inst.sets) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i) out << ' ';
            out << set[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace pipart
