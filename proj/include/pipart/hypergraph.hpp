#ifndef PIPART_HYPERGRAPH_HPP
#define PIPART_HYPERGRAPH_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace pipart {

using Edge = std::vector<int>; // k distinct vertices, ascending

// A k-uniform hypergraph on vertices 0..n-1. Edges are canonicalized to
// ascending order, stored lexicographically sorted and deduplicated; edge
// membership is a set query independent of which subset is asked.
class Hypergraph {
public:
    Hypergraph(int n, int k, std::vector<Edge> edges = {});

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_edge(Edge e) const;                  // canonicalizes its argument
    bool is_edge_sorted(const Edge& e) const;    // argument must be ascending

    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_;
    }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }

private:
    int n_;
    int k_;
    std::vector<Edge> edges_;
    // Fast membership for desk-scale graphs (n <= 255, k <= 8); edges packed
    // one vertex per byte. Falls back to binary search otherwise.
    bool packable_;
    std::unordered_set<std::uint64_t> packed_;

    std::uint64_t pack(const Edge& e) const;
};

// A relabeled sub-hypergraph together with the order-preserving map from its
// dense vertex ids back to the parent's vertex ids.
struct SubHypergraph {
    Hypergraph graph;
    std::vector<int> to_parent;
};

// Edge set complemented within all k-subsets of V; involution.
Hypergraph complement_hypergraph(const Hypergraph& g);

// Subgraph induced by W: vertex set W relabeled 0..|W|-1, edges contained in W.
SubHypergraph induced(const Hypergraph& g, const std::vector<int>& w);

// Link of U (|U| < k): the (k-|U|)-uniform hypergraph on V \ U whose edges
// are exactly the sets Y with Y ∪ U an edge of g.
SubHypergraph link(const Hypergraph& g, const std::vector<int>& u);

bool is_independent(const Hypergraph& g, const std::vector<int>& w);
bool is_clique(const Hypergraph& g, const std::vector<int>& w);

} // namespace pipart

#endif
