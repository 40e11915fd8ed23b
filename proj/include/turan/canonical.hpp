#pragma once

#include <compare>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Total-order key with: equal keys <=> isomorphic graphs.
struct CanonicalForm {
    std::string bytes;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

struct CanonResult {
    std::vector<int> new_label;  // old vertex -> canonical label
    // Automorphisms discovered during the search (maps old -> old). These
    // generate a subgroup of Aut(g); orbits computed from them are a
    // refinement of the true orbits, which is all the callers rely on.
    std::vector<std::vector<int>> generators;
};

// Equitable refinement plus individualization backtracking; the canonical
// labeling minimizes the adjacency bit string over the search leaves.
CanonResult canonical_labeling(const Graph& g);

Graph canonical_copy(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// One vertex per orbit of the discovered automorphism group (sound for
// symmetry pruning: never coarser than the true orbit partition).
std::vector<int> orbit_representatives(const Graph& g);

}  // namespace turan
