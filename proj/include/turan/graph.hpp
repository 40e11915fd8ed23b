#pragma once

#include <string>
#include <utility>
#include <vector>

#include "turan/bitset.hpp"

namespace turan {

// Simple undirected graph on labeled vertices 0..n-1 with bitset adjacency
// rows. Immutable by convention once built; all free functions are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    int max_degree() const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<std::vector<int>> components() const;
    bool is_connected() const;

    // Subgraph induced on verts, relabeled 0..k-1 in the given order.
    Graph induced(const std::vector<int>& verts) const;
    Graph with_vertex_removed(int v) const;
    // new_label[old] = new; must be a permutation of 0..n-1.
    Graph relabeled(const std::vector<int>& new_label) const;
    Graph complement() const;

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Join: every vertex of g1 adjacent to every vertex of g2; g1 keeps its
// labels, g2 shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);

// Components are the inputs, indices concatenated in order.
Graph disjoint_union(const std::vector<Graph>& gs);

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);  // K_{1,leaves}: center 0
Graph complete_multipartite(const std::vector<int>& parts);
Graph from_edges(int n, const std::vector<std::pair<int, int>>& es);
}  // namespace graphs

}  // namespace turan
