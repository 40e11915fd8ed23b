#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/tree.hpp"

namespace turan {

inline constexpr uint64_t kDefaultBudget = 100'000'000;

// Patterns whose presence a host must avoid to be "free".
struct ForbiddenFamily {
    std::vector<Graph> patterns;
    std::string name;
};

// {K_{1,k}, kK_2, 2K_{1,k-1}}
ForbiddenFamily aux_family(int k);
// {K_{1,k}, kK_2}
ForbiddenFamily ahs_family(int k);

struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex, injective
};

bool is_valid_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& map);

enum class FindOutcome { Found, NotFound, BudgetExceeded };

struct FindResult {
    FindOutcome outcome = FindOutcome::NotFound;
    std::optional<Embedding> embedding;
    uint64_t nodes = 0;
};

// Subgraph (not induced) search: Found iff pattern embeds into host. The
// budget counts candidate assignments; exceeding it yields BudgetExceeded,
// never NotFound. Deterministic for fixed inputs and budget.
// use_host_symmetry restricts the first assignment to one host vertex per
// discovered automorphism orbit (sound; worth it for large symmetric hosts).
FindResult find_subgraph(const Graph& host, const Graph& pattern, uint64_t budget = kDefaultBudget,
                         bool use_host_symmetry = false);

enum class FreeStatus { Free, NotFree, Unknown };

struct FreeResult {
    FreeStatus status = FreeStatus::Free;
    int pattern_index = -1;  // witness pattern when NotFree
    std::optional<Embedding> witness;
    uint64_t nodes = 0;
};

// Tests the patterns in ascending edge-count order (stable); the first
// embedding found wins. Star, matching and double-star patterns are decided
// by direct structural checks; the rest run through find_subgraph with the
// given per-pattern budget.
FreeResult is_free(const Graph& host, const ForbiddenFamily& family, uint64_t budget = kDefaultBudget);

// Freeness of host against every member of splitting_family(tree), with
// matching-number and max-degree prefilters (a member with nu or Delta above
// the host's cannot embed).
FreeResult is_splitfamily_free(const Graph& host, const Graph& tree, uint64_t budget = kDefaultBudget,
                               size_t family_cap = 100000);

}  // namespace turan
