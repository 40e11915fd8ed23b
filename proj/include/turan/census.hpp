#pragma once

#include <functional>
#include <string>
#include <vector>

#include "turan/containment.hpp"
#include "turan/formulas.hpp"

namespace turan {

enum class CensusMode { MaxEdges, AllExtremal };

struct CensusQuery {
    ForbiddenFamily family;
    int max_vertices = 0;
    // Extra constraints; caps implied by the family (K_{1,k} => Delta <= k-1,
    // kK_2 => nu <= k-1) are derived from pattern structure and intersected.
    std::optional<int> delta_cap, nu_cap;
    CensusMode mode = CensusMode::AllExtremal;
    uint64_t node_budget = UINT64_MAX;
    double time_budget_seconds = 0;  // 0 = unlimited
};

struct CensusResult {
    int best_edges = 0;
    // Canonical copies of the family-free graphs without isolated vertices
    // attaining best_edges, sorted by canonical key. The 0-vertex graph
    // stands in when no nonempty free graph exists.
    std::vector<Graph> extremal;
    uint64_t nodes_explored = 0;
    bool complete = true;
};

// Canonical-augmentation generation: visits every family-free graph with at
// most max_vertices and no isolated vertices exactly once up to isomorphism.
// Returns false when a node/time budget stopped the search early.
bool generate_free_graphs(const CensusQuery& q, const std::function<void(const Graph&)>& visit);

CensusResult max_edges_free(const CensusQuery& q);

// Brute-force oracle: exact max edges over graphs with nu(G) <= nu_cap and
// Delta(G) <= delta_cap (exhaustive generation; caps at most 4).
CensusResult max_edges_nu_delta(int nu_cap, int delta_cap);

enum class CheckStatus { Pass, Fail, Unknown, Info };
const char* to_string(CheckStatus s);

struct VerifyCheck {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

enum class VerifyMode { Free, Perturb, Exhaustive };

// For each n in [n_from, n_to]: builds every construction named by dispatch,
// checks its edge count against the dispatch value, and certifies blow-up
// freeness (Free mode). Perturb mode additionally reports, for every single
// edge added to a construction, whether the blow-up appears (informational).
// Exhaustive mode (tiny blow-ups only) confirms by census that no free graph
// beats the dispatch value; the budgets also bound that census.
std::vector<VerifyCheck> verify_theorem(const Tree& t, int p, int n_from, int n_to, VerifyMode mode,
                                        uint64_t budget = kDefaultBudget,
                                        double time_budget_seconds = 0);

}  // namespace turan
