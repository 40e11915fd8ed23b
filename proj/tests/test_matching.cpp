#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_util.hpp"
#include "turan/matching.hpp"

using namespace turan;
using namespace turan::testing;

namespace {

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && matching_number(g) * 2 == g.order();
}

bool is_factor_critical(const Graph& g) {
    if (g.order() % 2 == 0) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!has_perfect_matching(g.with_vertex_removed(v))) return false;
    return true;
}

void check_matching_valid(const Graph& g, const MatchingWitness& w) {
    VertexSet seen;
    for (auto [u, v] : w.edges) {
        CHECK(g.has_edge(u, v));
        CHECK(!seen.test(u));
        CHECK(!seen.test(v));
        seen.set(u);
        seen.set(v);
    }
    CHECK(static_cast<int>(w.edges.size()) == w.size);
}

}  // namespace

TEST_CASE("matching number on named graphs") {
    CHECK(matching_number(graphs::cycle(5)) == 2);
    CHECK(matching_number(disjoint_union({graphs::complete(3), graphs::complete(3)})) == 2);
    CHECK(matching_number(petersen()) == 5);
    CHECK(brute_matching_number(petersen()) == 5);
    CHECK(matching_number(Graph(0)) == 0);
    CHECK(matching_number(graphs::empty(4)) == 0);
    for (int k = 1; k <= 6; ++k)
        CHECK(matching_number(disjoint_union(std::vector<Graph>(k, graphs::complete(2)))) == k);
}

TEST_CASE("blossom matches brute force on random graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        double p = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
        Graph g = random_graph(rng, n, p);
        MatchingWitness w = max_matching(g);
        check_matching_valid(g, w);
        CHECK(w.size == brute_matching_number(g));
    }
}

TEST_CASE("bipartite cover on named graphs") {
    Graph k33 = graphs::complete_multipartite({3, 3});
    auto cert = bipartite_cover(k33, VertexSet::range(3));
    CHECK(cert.matching.size() == 3);
    CHECK(cert.cover.size() == 3);
    CHECK(!cert.hall_violator.has_value());

    // Star with X = leaves: Hall violator, |N(S)| = 1 < |S| = 3.
    Graph star = graphs::star(3);
    VertexSet leaves;
    for (int v = 1; v <= 3; ++v) leaves.set(v);
    auto star_cert = bipartite_cover(star, leaves);
    REQUIRE(star_cert.hall_violator.has_value());
    VertexSet nbrs;
    for (int v : *star_cert.hall_violator) {
        CHECK(leaves.test(v));
        star.neighbors(v).for_each([&](int w) { nbrs.set(w); });
    }
    CHECK(nbrs.count() < static_cast<int>(star_cert.hall_violator->size()));

    CHECK_THROWS_AS(bipartite_cover(graphs::complete(3), VertexSet::range(1)), std::invalid_argument);
}

TEST_CASE("konig certificate on random bipartite graphs") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        int nx = std::uniform_int_distribution<int>(1, 5)(rng);
        int ny = std::uniform_int_distribution<int>(1, 5)(rng);
        Graph g(nx + ny);
        std::bernoulli_distribution coin(0.4);
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y)
                if (coin(rng)) g.add_edge(x, nx + y);
        auto cert = bipartite_cover(g, VertexSet::range(nx));
        CHECK(static_cast<int>(cert.matching.size()) == brute_matching_number(g));
        CHECK(cert.cover.size() == cert.matching.size());
        // The cover touches every edge.
        VertexSet cover;
        for (int v : cert.cover) cover.set(v);
        for (auto [u, v] : g.edges()) CHECK((cover.test(u) || cover.test(v)));
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(graphs::cycle(5)) == 2);
    CHECK(independence_number(graphs::complete(7)) == 1);
    CHECK(independence_number(graphs::empty(6)) == 6);
    CHECK(independence_number(petersen()) == 4);
    CHECK_THROWS_AS(independence_number(Graph(41)), std::invalid_argument);

    // Gallai identity alpha + beta = n on random trees (beta = nu by Konig).
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        Graph t = random_tree(rng, n);
        CHECK(independence_number(t) + matching_number(t) == n);
    }
}

TEST_CASE("gallai-edmonds on named graphs") {
    auto c5 = gallai_edmonds(graphs::cycle(5));
    CHECK(c5.S.empty());
    CHECK(c5.odd_components.size() == 1);
    CHECK(c5.even_components.empty());
    CHECK(c5.nu == 2);

    auto k2 = gallai_edmonds(graphs::complete(2));
    CHECK(k2.S.empty());
    CHECK(k2.even_components.size() == 1);
    CHECK(k2.nu == 1);

    auto star = gallai_edmonds(graphs::star(3));
    CHECK(star.S == std::vector<int>{0});
    CHECK(star.odd_components.size() == 3);
    CHECK(star.nu == 1);
}

TEST_CASE("gallai-edmonds structure properties on random graphs") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        Graph g = random_graph(rng, n, p);
        auto rec = gallai_edmonds(g);
        check_matching_valid(g, rec.matching);
        CHECK(rec.nu == brute_matching_number(g));

        // (i) nu = (|V| + |S| - #odd components) / 2.
        CHECK(2 * rec.nu == n + static_cast<int>(rec.S.size()) - static_cast<int>(rec.odd_components.size()));

        // (ii) every odd component is factor-critical.
        for (const auto& comp : rec.odd_components) {
            CHECK(comp.size() % 2 == 1);
            CHECK(is_factor_critical(g.induced(comp)));
        }

        // (iii) every even component has a perfect matching.
        for (const auto& comp : rec.even_components) {
            CHECK(comp.size() % 2 == 0);
            CHECK(has_perfect_matching(g.induced(comp)));
        }

        // (iv) every maximum matching saturates S, each S-edge into a
        // distinct odd component.
        std::vector<int> comp_of(n, -1);
        for (size_t i = 0; i < rec.odd_components.size(); ++i)
            for (int v : rec.odd_components[i]) comp_of[v] = static_cast<int>(i);
        VertexSet s_set;
        for (int v : rec.S) s_set.set(v);
        for (const auto& m : all_maximum_matchings(g)) {
            std::vector<int> partner(n, -1);
            for (auto [u, v] : m) {
                partner[u] = v;
                partner[v] = u;
            }
            std::set<int> comps_used;
            for (int s : rec.S) {
                REQUIRE(partner[s] != -1);
                CHECK(!s_set.test(partner[s]));
                int c = comp_of[partner[s]];
                CHECK(c >= 0);  // partner lies in an odd component
                CHECK(comps_used.insert(c).second);
            }
        }
    }
}
