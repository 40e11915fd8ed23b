#pragma once

#include <vector>

#include "turan/constructions.hpp"
#include "turan/tree.hpp"

namespace turan {

// Exact integer evaluators for the extremal edge-count functions. All of
// these are pure integer arithmetic; boundary-case equalities are exact.

long long g1(long long k);  // k^2 - 3k/2 (k even), k^2 - (3k-1)/2 (k odd)
long long g2(long long k);  // k^2 - 3k/2 (k even), k^2 - k   (k odd)

long long turan_edge_count(long long n, long long r);

// g(n,p,a) = e(T_{n-a+1,p}) + (a-1)(n-a+1) + e(K_{a-1})
long long g_base(long long n, long long p, long long a);
// Variant with e(K_{a-1}) replaced by e(R(a-1,d)) = floor((a-1)d/2).
long long g_reg(long long n, long long p, long long a, long long d);

// Max edges with matching number <= nu and max degree <= delta:
// nu*delta + floor(delta/2) * floor(nu / ceil(delta/2)).
long long chvatal_hanson(long long nu, long long delta);

// Per-component bound used by the census argument:
// C(x,2) for x <= k-1, floor((k-1)x/2) for x >= k.
long long component_edge_bound(long long x, long long k);

enum class TheoremCaseTag { K_EVEN, K_ODD_B0_EMPTY, K_ODD_B_SMALL, K_ODD_B_LARGE, K_ODD_B_BOUNDARY };

const char* to_string(TheoremCaseTag tag);

struct TheoremCase {
    TheoremCaseTag tag;
    long long value = 0;
    std::vector<ConstructionSpec> extremal;
};

// Case dispatch of the main extremal formula for the edge blow-up by
// cliques of size p+1 of a tree with the given parameters. Requires p >= 3,
// k >= 2, and (unless require_feasible is cleared) n large enough that every
// named construction is feasible.
TheoremCase dispatch(const TreeParams& params, long long n, long long p, bool require_feasible = true);

}  // namespace turan
