#include "pipart/solve/gf2.hpp"

namespace pipart {

LinearSystem build_incidence_system(const Hypergraph& g) {
    LinearSystem sys;
    sys.cols = g.n();
    std::size_t words = static_cast<std::size_t>(g.n() + 63) / 64;
    if (words == 0) words = 1;
    sys.rows.reserve(g.edge_count());
    sys.rhs.assign(g.edge_count(), 1);
    for (const Edge& e : g.edges()) {
        std::vector<std::uint64_t> row(words, 0);
        for (int v : e) row[static_cast<std::size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

std::optional<std::vector<std::uint8_t>> gf2_solve(LinearSystem sys) {
    const std::size_t m = sys.rows.size();
    const int n = sys.cols;
    std::vector<int> pivot_col; // pivot column of row r, in elimination order
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        std::size_t pr = rank;
        while (pr < m && !sys.get(pr, col)) ++pr;
        if (pr == m) continue;
        std::swap(sys.rows[pr], sys.rows[rank]);
        std::swap(sys.rhs[pr], sys.rhs[rank]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != rank && sys.get(r, col)) {
                for (std::size_t w = 0; w < sys.rows[r].size(); ++w)
                    sys.rows[r][w] ^= sys.rows[rank][w];
                sys.rhs[r] ^= sys.rhs[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // A zero row with rhs 1 means no solution.
    for (std::size_t r = rank; r < m; ++r)
        if (sys.rhs[r]) return std::nullopt;

    std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0); // free variables stay 0
    for (std::size_t r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivot_col[r])] = sys.rhs[r]; // rows fully reduced above
    return x;
}

} // namespace pipart
