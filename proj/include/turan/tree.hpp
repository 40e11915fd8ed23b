#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// A verified tree with its two color classes, |class_a| <= |class_b|.
struct Tree {
    Graph graph;
    std::vector<int> class_a;
    std::vector<int> class_b;
};

// The main dispatch parameters of a tree: a = |A|, k = min degree over A,
// A0 = A-vertices of degree exactly k, B0 = B-vertices with >= 2 neighbors
// in A0, b = (min degree over B0) - 2, undefined when B0 is empty.
struct TreeParams {
    int a = 0;
    int k = 0;
    std::vector<int> a0;
    std::vector<int> b0;
    std::optional<int> b;
};

// Validates that g is a tree and returns its bipartition with the smaller
// class designated A. Ties go to the class containing vertex 0; pass
// swap_equal_classes to force the other orientation (equal sizes only).
Tree analyze_tree(const Graph& g, bool swap_equal_classes = false);

TreeParams extract_params(const Tree& t);

// Replace v by deg(v) new vertices, each adjacent to one distinct former
// neighbor of v (neighbors taken in ascending order, new vertices appended).
// Remaining vertices are compacted, preserving relative order.
Graph split_vertex(const Graph& g, int v);

// All graphs obtainable by splitting a subset of `restrict` (default: all
// vertices), deduplicated up to isomorphism; includes g itself. Members are
// returned as canonical copies sorted by canonical key. Throws when the
// family would exceed `cap` members.
std::vector<Graph> splitting_family(const Graph& g,
                                    const std::vector<int>* restrict_to = nullptr,
                                    size_t cap = 100000);

// Text format: one edge "u v" per line; '#' starts a comment.
Graph parse_edge_list(const std::string& text);

}  // namespace turan
