#include "pipart/reduce/cnf.hpp"

#include <algorithm>
#include <sstream>

#include "pipart/errors.hpp"

namespace pipart {

PreprocessedCnf preprocess_cnf(const CnfFormula& phi) {
    PreprocessedCnf out;
    out.formula = phi;
    std::vector<std::vector<int>> clauses; // variable width while rewriting
    clauses.reserve(phi.clauses.size());
    for (const auto& c : phi.clauses) clauses.push_back({c[0], c[1], c[2]});

    for (;;) {
        int forced = 0;
        for (const auto& c : clauses) {
            if (c.size() == 3 && c[0] == c[1] && c[1] == c[2]) {
                forced = c[0];
                break;
            }
        }
        if (forced == 0) break;
        out.forced.push_back(forced);
        std::vector<std::vector<int>> next;
        for (const auto& c : clauses) {
            if (std::find(c.begin(), c.end(), forced) != c.end()) continue; // satisfied
            std::vector<int> kept;
            for (int lit : c)
                if (lit != -forced) kept.push_back(lit);
            if (kept.empty()) {
                out.status = CnfStatus::TriviallyFalse;
                out.formula = CnfFormula{};
                return out;
            }
            // Re-triple short residues so the clause gadget stays 3-wide.
            while (kept.size() < 3) kept.insert(kept.begin(), kept.front());
            next.push_back(std::move(kept));
        }
        clauses = std::move(next);
    }

    if (clauses.empty()) {
        out.status = CnfStatus::TriviallyTrue;
        out.formula = CnfFormula{phi.num_vars, {}};
        return out;
    }
    out.status = CnfStatus::Formula;
    out.formula.num_vars = phi.num_vars;
    out.formula.clauses.clear();
    for (const auto& c : clauses) out.formula.clauses.push_back({c[0], c[1], c[2]});
    return out;
}

bool eval_cnf(const CnfFormula& phi, const std::vector<bool>& assignment) {
    for (const auto& c : phi.clauses) {
        bool sat = false;
        for (int lit : c) {
            bool v = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
            if (lit < 0) v = !v;
            if (v) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool cnf_satisfiable(const CnfFormula& phi, int max_vars) {
    if (phi.num_vars > max_vars)
        throw ResourceError("satisfiability oracle capped at " + std::to_string(max_vars) + " variables");
    const std::uint64_t total = std::uint64_t(1) << phi.num_vars;
    std::vector<bool> a(static_cast<std::size_t>(phi.num_vars));
    for (std::uint64_t m = 0; m < total; ++m) {
        for (int i = 0; i < phi.num_vars; ++i) a[static_cast<std::size_t>(i)] = (m >> i) & 1;
        if (eval_cnf(phi, a)) return true;
    }
    return false;
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long long vars = -1, num_clauses = -1;
    CnfFormula phi;
    std::vector<int> current;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') continue;
        if (vars < 0) {
            std::istringstream iss(line);
            std::string p, cnf;
            if (!(iss >> p >> cnf >> vars >> num_clauses) || p != "p" || cnf != "cnf")
                throw ParseError("expected header 'p cnf <vars> <clauses>'", line_no);
            if (vars < 0 || num_clauses < 0) throw ParseError("negative counts in header", line_no);
            continue;
        }
        std::istringstream iss(line);
        long long lit;
        while (iss >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw ParseError("clause has " + std::to_string(current.size()) +
                                         " literals, exactly 3 required",
                                     line_no);
                phi.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            long long v = lit < 0 ? -lit : lit;
            if (v > vars)
                throw ParseError("variable " + std::to_string(v) + " exceeds declared count " +
                                     std::to_string(vars),
                                 line_no);
            current.push_back(static_cast<int>(lit));
        }
        if (!iss.eof()) throw ParseError("invalid literal", line_no);
    }
    if (vars < 0) throw ParseError("missing header 'p cnf <vars> <clauses>'", line_no == 0 ? 1 : line_no);
    if (!current.empty()) throw ParseError("last clause is not zero-terminated", line_no);
    if (static_cast<long long>(phi.clauses.size()) != num_clauses)
        throw ParseError("header declares " + std::to_string(num_clauses) + " clauses but " +
                             std::to_string(phi.clauses.size()) + " were given",
                         line_no == 0 ? 1 : line_no);
    phi.num_vars = static_cast<int>(vars);
    return phi;
}

std::string serialize_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

} // namespace pipart
