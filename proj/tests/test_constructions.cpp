#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "test_util.hpp"
#include "turan/canonical.hpp"
#include "turan/containment.hpp"
#include "turan/formulas.hpp"

using namespace turan;
using namespace turan::testing;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("turan graphs") {
    Graph t73 = turan_graph(7, 3);
    CHECK(turan_parts(7, 3) == std::vector<int>{3, 2, 2});
    CHECK(t73.edge_count() == 16);
    CHECK(turan_graph(5, 1).edge_count() == 0);
    CHECK(turan_graph(5, 5) == graphs::complete(5));
}

TEST_CASE("almost regular graphs") {
    Graph r52 = almost_regular(5, 2);
    CHECK(r52.edge_count() == 5);
    CHECK(sorted_degrees(r52) == std::vector<int>{2, 2, 2, 2, 2});

    Graph r73 = almost_regular(7, 3);
    CHECK(r73.edge_count() == 10);
    CHECK(sorted_degrees(r73) == std::vector<int>{2, 3, 3, 3, 3, 3, 3});

    Graph r31 = almost_regular(3, 1);
    CHECK(canonical_form(r31) ==
          canonical_form(disjoint_union({graphs::complete(2), graphs::complete(1)})));

    CHECK_THROWS_AS(almost_regular(3, 3), std::invalid_argument);

    for (int n = 1; n <= 14; ++n)
        for (int d = 0; d < n; ++d) {
            Graph r = almost_regular(n, d);
            CHECK(r.edge_count() == n * d / 2);
            auto deg = sorted_degrees(r);
            CHECK(deg.back() <= d);
            if (n * d % 2 == 0) {
                CHECK(deg.front() == (n > 0 ? d : 0));
            } else {
                CHECK(deg.front() == d - 1);
                CHECK(deg[1] == d);
            }
        }
}

TEST_CASE("embed_in_class") {
    Graph l1 = embed_in_class({3, 2, 2}, 1, almost_regular(3, 1));
    CHECK(l1.edge_count() == 16 + 1);
    Graph unchanged = embed_in_class({3, 2, 2}, 2, Graph(0));
    CHECK(unchanged == turan_graph(7, 3));
    CHECK_THROWS_AS(embed_in_class({3, 2, 2}, 2, graphs::complete(3)), std::invalid_argument);
    CHECK_THROWS_AS(embed_in_class({3, 2, 2}, 4, Graph(1)), std::invalid_argument);
}

TEST_CASE("spec text round trip") {
    for (const char* text : {"H1 n=20 p=3 a=2 k=2", "H2 n=30 p=3 a=2 k=3", "H2R n=30 p=3 a=3 d=0 k=3",
                             "TURAN n=7 r=3", "R n=5 d=2", "K parts=3,2,2", "L1 n=19 p=3 k=2",
                             "L2 n=19 p=3 k=3"}) {
        ConstructionSpec spec = ConstructionSpec::parse(text);
        CHECK(spec.to_text() == text);
        CHECK(ConstructionSpec::parse(spec.to_text()) == spec);
    }
    CHECK_THROWS_AS(ConstructionSpec::parse("NOPE n=3"), std::invalid_argument);
}

TEST_CASE("H-family edge counts match the closed forms") {
    Graph h1 = build_construction(ConstructionSpec::h1(20, 3, 2, 2));
    CHECK(h1.order() == 20);
    CHECK(h1.edge_count() == 140);
    CHECK(g_base(20, 3, 2) + g1(2) == 140);

    for (int n : {20, 23, 30, 41}) {
        for (int p : {3, 4}) {
            for (int a : {1, 2, 3}) {
                for (int k : {2, 3, 4, 5}) {
                    ConstructionSpec s1 = ConstructionSpec::h1(n, p, a, k);
                    ConstructionSpec s2 = ConstructionSpec::h2(n, p, a, k);
                    if (n >= min_feasible_n(s1))
                        CHECK(build_construction(s1).edge_count() == g_base(n, p, a) + g1(k));
                    if (n >= min_feasible_n(s2))
                        CHECK(build_construction(s2).edge_count() == g_base(n, p, a) + g2(k));
                    for (int d = 0; d < a - 1; ++d) {
                        ConstructionSpec s3 = ConstructionSpec::h2rd(n, p, a, d, k);
                        if (n >= min_feasible_n(s3))
                            CHECK(build_construction(s3).edge_count() == g_reg(n, p, a, d) + g2(k));
                    }
                }
            }
        }
    }

    // a = 1: the join factor is empty, H1 is the payload-in-Turan graph.
    Graph h1_a1 = build_construction(ConstructionSpec::h1(20, 3, 1, 2));
    Graph l1 = build_construction(ConstructionSpec::l1(20, 3, 2));
    CHECK(h1_a1 == l1);
}

TEST_CASE("payload-class choice never changes the edge count") {
    for (int c = 1; c <= 3; ++c) {
        ConstructionSpec h1 = ConstructionSpec::h1(24, 3, 2, 2);
        ConstructionSpec h2 = ConstructionSpec::h2(24, 3, 2, 3);
        CHECK(build_construction(h1, c).edge_count() == build_construction(h1, 1).edge_count());
        CHECK(build_construction(h2, c).edge_count() == build_construction(h2, 1).edge_count());
    }
}

TEST_CASE("the two even-k payloads tie") {
    for (int k = 2; k <= 10; k += 2) {
        Graph a = disjoint_union({almost_regular(k + 1, k - 1), graphs::complete(k - 1)});
        Graph b = almost_regular(2 * k - 1, k - 1);
        CHECK(a.edge_count() == b.edge_count());
        CHECK(a.edge_count() == g1(k));
    }
}

TEST_CASE("min feasible n") {
    CHECK(min_feasible_n(ConstructionSpec::h1(0, 3, 2, 2)) == 8);
    ConstructionSpec tight = ConstructionSpec::h1(8, 3, 2, 2);
    CHECK(build_construction(tight).order() == 8);
    CHECK_THROWS_AS(build_construction(ConstructionSpec::h1(7, 3, 2, 2)), std::invalid_argument);
}

TEST_CASE("edge blow-up") {
    CHECK(canonical_form(edge_blowup(graphs::complete(2), 3)) == canonical_form(graphs::complete(3)));

    Graph p3_blown = edge_blowup(graphs::path(3), 3);
    CHECK(p3_blown.order() == 5);
    CHECK(p3_blown.edge_count() == 6);

    Graph p5_blown = edge_blowup(graphs::path(5), 4);
    CHECK(p5_blown.order() == 13);
    CHECK(p5_blown.edge_count() == 24);

    CHECK(edge_blowup(graphs::path(4), 2) == graphs::path(4));
    CHECK_THROWS_AS(edge_blowup(graphs::path(3), 1), std::invalid_argument);

    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        Graph f = random_graph(rng, 5, 0.5);
        int q = std::uniform_int_distribution<int>(2, 5)(rng);
        Graph blown = edge_blowup(f, q);
        CHECK(blown.order() == f.order() + f.edge_count() * (q - 2));
        CHECK(blown.edge_count() == f.edge_count() * q * (q - 1) / 2);
        // The blow-up contains the original as a subgraph on its own labels.
        std::vector<int> identity(f.order());
        std::iota(identity.begin(), identity.end(), 0);
        CHECK(is_valid_embedding(blown, f, identity));
    }
}

TEST_CASE("matching-join embedding is a certified blow-up witness") {
    for (int p : {3, 4}) {
        for (const Graph& t : {graphs::complete(2), graphs::path(3), graphs::path(5), graphs::star(3)}) {
            BlowupEmbedding w = embed_blowup_in_matching_join(analyze_tree(t), p);
            CHECK(w.host.order() == 2 * p * w.pattern.order());
            CHECK(is_valid_embedding(w.host, w.pattern, w.map));
        }
    }
    CHECK_THROWS_AS(embed_blowup_in_matching_join(analyze_tree(graphs::path(3)), 2), std::invalid_argument);
}

TEST_CASE("blow-up cliques share only original vertices") {
    Graph t = graphs::path(5);
    Graph blown = edge_blowup(t, 4);
    auto es = t.edges();
    // Fresh blocks are appended per edge in order; check pairwise overlaps.
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            std::vector<int> ci{es[i].first, es[i].second, 5 + 2 * static_cast<int>(i),
                                6 + 2 * static_cast<int>(i)};
            std::vector<int> cj{es[j].first, es[j].second, 5 + 2 * static_cast<int>(j),
                                6 + 2 * static_cast<int>(j)};
            std::vector<int> inter;
            std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(inter));
            for (int v : inter) CHECK(v < 5);
        }
}
