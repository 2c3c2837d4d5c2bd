#include "pipart/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "pipart/errors.hpp"
#include "pipart/subsets.hpp"

namespace pipart {

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k) {
    if (n < 0) throw UsageError("vertex count must be nonnegative");
    if (k < 1) throw UsageError("uniformity must be at least 1");
    for (Edge& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw UsageError("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw UsageError("edge vertex " + std::to_string(e[i]) + " out of range [0, " + std::to_string(n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw UsageError("edge contains vertex " + std::to_string(e[i]) + " twice");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    packable_ = n_ <= 255 && k_ <= 8;
    if (packable_) {
        packed_.reserve(edges_.size() * 2);
        for (const Edge& e : edges_) packed_.insert(pack(e));
    }
}

std::uint64_t Hypergraph::pack(const Edge& e) const {
    std::uint64_t x = 0;
    for (int v : e) x = (x << 8) | static_cast<std::uint64_t>(static_cast<unsigned>(v) + 1);
    return x;
}

bool Hypergraph::is_edge(Edge e) const {
    std::sort(e.begin(), e.end());
    return is_edge_sorted(e);
}

bool Hypergraph::is_edge_sorted(const Edge& e) const {
    if (static_cast<int>(e.size()) != k_) return false;
    if (packable_) return packed_.count(pack(e)) != 0;
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph complement_hypergraph(const Hypergraph& g) {
    std::vector<Edge> out;
    for_each_k_subset(g.n(), g.k(), [&](const std::vector<int>& x) {
        if (!g.is_edge_sorted(x)) out.push_back(x);
        return true;
    });
    return Hypergraph(g.n(), g.k(), std::move(out));
}

SubHypergraph induced(const Hypergraph& g, const std::vector<int>& w) {
    std::vector<int> to_parent(w);
    std::sort(to_parent.begin(), to_parent.end());
    std::vector<int> new_id(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        int v = to_parent[i];
        if (v < 0 || v >= g.n()) throw UsageError("induced: vertex " + std::to_string(v) + " not in V");
        if (new_id[static_cast<std::size_t>(v)] != -1) throw UsageError("induced: duplicate vertex in W");
        new_id[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        bool inside = true;
        for (int v : e) {
            int id = new_id[static_cast<std::size_t>(v)];
            if (id == -1) {
                inside = false;
                break;
            }
            mapped.push_back(id);
        }
        if (inside) edges.push_back(std::move(mapped));
    }
    return SubHypergraph{Hypergraph(static_cast<int>(to_parent.size()), g.k(), std::move(edges)),
                         std::move(to_parent)};
}

SubHypergraph link(const Hypergraph& g, const std::vector<int>& u) {
    if (static_cast<int>(u.size()) >= g.k())
        throw UsageError("link: |U| must be smaller than the uniformity");
    std::vector<int> anchor(u);
    std::sort(anchor.begin(), anchor.end());
    std::vector<bool> in_u(static_cast<std::size_t>(g.n()), false);
    for (std::size_t i = 0; i < anchor.size(); ++i) {
        int v = anchor[i];
        if (v < 0 || v >= g.n()) throw UsageError("link: vertex " + std::to_string(v) + " not in V");
        if (i > 0 && anchor[i] == anchor[i - 1]) throw UsageError("link: duplicate vertex in U");
        in_u[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> to_parent;
    std::vector<int> new_id(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (!in_u[static_cast<std::size_t>(v)]) {
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(to_parent.size());
            to_parent.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int hits = 0;
        Edge rest;
        for (int v : e) {
            if (in_u[static_cast<std::size_t>(v)])
                ++hits;
            else
                rest.push_back(new_id[static_cast<std::size_t>(v)]);
        }
        if (hits == static_cast<int>(anchor.size())) edges.push_back(std::move(rest));
    }
    int nk = g.k() - static_cast<int>(anchor.size());
    return SubHypergraph{Hypergraph(static_cast<int>(to_parent.size()), nk, std::move(edges)),
                         std::move(to_parent)};
}

bool is_independent(const Hypergraph& g, const std::vector<int>& w) {
    std::vector<bool> in_w(static_cast<std::size_t>(g.n()), false);
    for (int v : w) {
        if (v < 0 || v >= g.n()) throw UsageError("is_independent: vertex not in V");
        in_w[static_cast<std::size_t>(v)] = true;
    }
    for (const Edge& e : g.edges()) {
        bool inside = true;
        for (int v : e)
            if (!in_w[static_cast<std::size_t>(v)]) {
                inside = false;
                break;
            }
        if (inside) return false;
    }
    return true;
}

bool is_clique(const Hypergraph& g, const std::vector<int>& w) {
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.n()) throw UsageError("is_clique: vertex not in V");
    bool ok = true;
    for_each_k_subset_of(sorted, g.k(), [&](const std::vector<int>& x) {
        if (!g.is_edge_sorted(x)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

} // namespace pipart
