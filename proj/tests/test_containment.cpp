#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_util.hpp"
#include "turan/constructions.hpp"
#include "turan/containment.hpp"
#include "turan/matching.hpp"

using namespace turan;
using namespace turan::testing;

TEST_CASE("find_subgraph basics") {
    auto self = find_subgraph(graphs::complete(3), graphs::complete(3));
    REQUIRE(self.outcome == FindOutcome::Found);
    CHECK(is_valid_embedding(graphs::complete(3), graphs::complete(3), self.embedding->map));

    CHECK(find_subgraph(graphs::cycle(5), graphs::complete(3)).outcome == FindOutcome::NotFound);
    CHECK(find_subgraph(graphs::path(3), graphs::path(4)).outcome == FindOutcome::NotFound);

    // Empty pattern embeds anywhere.
    CHECK(find_subgraph(graphs::complete(3), Graph(0)).outcome == FindOutcome::Found);
    // Isolated pattern vertices just need spare host vertices.
    CHECK(find_subgraph(graphs::complete(3), graphs::empty(3)).outcome == FindOutcome::Found);
    CHECK(find_subgraph(graphs::complete(3), graphs::empty(4)).outcome == FindOutcome::NotFound);
}

TEST_CASE("budget exhaustion is distinct from not-found") {
    auto r = find_subgraph(graphs::complete(8), graphs::complete(7), 0);
    CHECK(r.outcome == FindOutcome::BudgetExceeded);
    auto r2 = find_subgraph(graphs::complete(8), graphs::complete(7), 3);
    CHECK(r2.outcome != FindOutcome::NotFound);
}

TEST_CASE("find_subgraph agrees with brute force") {
    std::mt19937 rng(67);
    int found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int nh = std::uniform_int_distribution<int>(1, 8)(rng);
        int np = std::uniform_int_distribution<int>(1, std::min(nh, 6))(rng);
        Graph host = random_graph(rng, nh, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
        Graph pattern = random_graph(rng, np, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
        auto r = find_subgraph(host, pattern);
        bool expected = brute_subgraph(host, pattern);
        CHECK((r.outcome == FindOutcome::Found) == expected);
        if (expected) {
            ++found;
            CHECK(is_valid_embedding(host, pattern, r.embedding->map));
        }
        // Host-symmetry pruning must not change the answer.
        auto rs = find_subgraph(host, pattern, kDefaultBudget, true);
        CHECK(rs.outcome == r.outcome);
    }
    CHECK(found > 50);
}

TEST_CASE("monotone under edge addition") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        Graph host = random_graph(rng, 7, 0.35);
        Graph pattern = random_graph(rng, 4, 0.5);
        if (find_subgraph(host, pattern).outcome != FindOutcome::Found) continue;
        Graph bigger = host;
        int u = std::uniform_int_distribution<int>(0, 6)(rng);
        int v = std::uniform_int_distribution<int>(0, 6)(rng);
        if (u != v) bigger.add_edge(u, v);
        CHECK(find_subgraph(bigger, pattern).outcome == FindOutcome::Found);
    }
}

TEST_CASE("nu and delta prefilters are sound") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 150; ++trial) {
        Graph host = random_graph(rng, 7, 0.3);
        Graph pattern = random_graph(rng, 5, 0.4);
        bool nu_reject = matching_number(pattern) > matching_number(host);
        bool delta_reject = pattern.max_degree() > host.max_degree();
        if (nu_reject || delta_reject)
            CHECK(find_subgraph(host, pattern).outcome == FindOutcome::NotFound);
    }
}

TEST_CASE("forbidden family checks") {
    Graph two_k3 = disjoint_union({graphs::complete(3), graphs::complete(3)});
    auto res = is_free(two_k3, aux_family(3));
    REQUIRE(res.status == FreeStatus::NotFree);
    // The witness is the double star 2K_{1,2}.
    CHECK(is_valid_embedding(two_k3, aux_family(3).patterns[res.pattern_index], res.witness->map));

    CHECK(is_free(almost_regular(5, 2), aux_family(3)).status == FreeStatus::Free);

    Graph m3 = disjoint_union(std::vector<Graph>(3, graphs::complete(2)));
    auto self = is_free(m3, ForbiddenFamily{{m3}, "self"});
    CHECK(self.status == FreeStatus::NotFree);
}

TEST_CASE("family fast paths agree with the generic search") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 120; ++trial) {
        Graph host = random_graph(rng, 8, std::uniform_real_distribution<double>(0.15, 0.6)(rng));
        for (int k : {2, 3, 4}) {
            for (const auto& fam : {aux_family(k), ahs_family(k)}) {
                auto fast = is_free(host, fam);
                bool brute_not_free = false;
                for (const Graph& pat : fam.patterns) brute_not_free |= brute_subgraph(host, pat);
                CHECK((fast.status == FreeStatus::NotFree) == brute_not_free);
                if (fast.status == FreeStatus::NotFree)
                    CHECK(is_valid_embedding(host, fam.patterns[fast.pattern_index], fast.witness->map));
            }
        }
    }
}

TEST_CASE("blow-up freeness of a named construction") {
    // H1(24,3,2,2) avoids the blow-up of P5 by K4's.
    Graph host = build_construction(ConstructionSpec::h1(24, 3, 2, 2));
    Graph pattern = edge_blowup(graphs::path(5), 4);
    auto r = find_subgraph(host, pattern, kDefaultBudget, true);
    CHECK(r.outcome == FindOutcome::NotFound);

    // The join with one more clique vertex is no longer free.
    Graph bigger = join(graphs::complete(2), build_construction(ConstructionSpec::l1(22, 3, 2)));
    auto r2 = find_subgraph(bigger, pattern, kDefaultBudget, true);
    REQUIRE(r2.outcome == FindOutcome::Found);
    CHECK(is_valid_embedding(bigger, pattern, r2.embedding->map));
}

TEST_CASE("splitting family freeness of the payload-class host") {
    // K_{a-1} joined with the payload class graph of H1 avoids the family.
    Graph t1 = graphs::from_edges(7, {{0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});  // a=2, k=3
    Graph c1 = disjoint_union({almost_regular(5, 2), graphs::empty(8)});
    Graph host = join(graphs::complete(1), c1);
    CHECK(is_splitfamily_free(host, t1).status == FreeStatus::Free);
}
