#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct MatchingWitness {
    std::vector<std::pair<int, int>> edges;  // pairwise vertex-disjoint
    int size = 0;
};

// Maximum matching in a general graph (Edmonds blossom search).
MatchingWitness max_matching(const Graph& g);
int matching_number(const Graph& g);

// match[v] = partner or -1. Given a matching that is maximum in g minus the
// vertex `root` (root unmatched), runs one alternating search from root and
// augments if possible. Returns true if the matching grew.
bool try_augment(const Graph& g, std::vector<int>& match, int root);

struct BipartiteCertificate {
    std::vector<std::pair<int, int>> matching;
    std::vector<int> cover;  // vertex cover with |cover| == |matching|
    // Present when side X cannot be saturated: S subset of X with |N(S)| < |S|.
    std::optional<std::vector<int>> hall_violator;
};

// Maximum matching plus a Konig cover for a bipartite graph with the given
// side. Throws std::invalid_argument when side_x is not one side of a
// bipartition.
BipartiteCertificate bipartite_cover(const Graph& g, const VertexSet& side_x);

// Exact independence number by branch and bound; throws when g.order()
// exceeds the search cap.
int independence_number(const Graph& g, int cap = 40);

struct GallaiEdmondsRecord {
    std::vector<int> S;
    std::vector<std::vector<int>> odd_components;   // factor-critical components of G-S
    std::vector<std::vector<int>> even_components;  // components of G-S with perfect matchings
    int nu = 0;
    MatchingWitness matching;  // a maximum matching witnessing nu
};

GallaiEdmondsRecord gallai_edmonds(const Graph& g);

}  // namespace turan
