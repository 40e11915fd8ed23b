#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/tree.hpp"

namespace turan {

// Symbolic recipe for the extremal constructions. Text form is one line,
// e.g. "H1 n=20 p=3 a=2 k=2", "H2R n=30 p=3 a=3 d=0 k=3", "R n=5 d=2",
// "TURAN n=7 r=3", "K parts=3,2,2", "L1 n=19 p=3 k=2".
struct ConstructionSpec {
    enum class Kind { Turan, AlmostRegular, CompleteMultipartite, L1, L2, H1, H2, H2RD };
    Kind kind = Kind::Turan;
    long long n = 0, r = 0, d = 0, p = 0, a = 0, k = 0;
    std::vector<int> parts;

    std::string to_text() const;
    static ConstructionSpec parse(const std::string& text);

    static ConstructionSpec turan(long long n, long long r);
    static ConstructionSpec almost_regular(long long n, long long d);
    static ConstructionSpec multipartite(std::vector<int> parts);
    static ConstructionSpec l1(long long n, long long p, long long k);
    static ConstructionSpec l2(long long n, long long p, long long k);
    static ConstructionSpec h1(long long n, long long p, long long a, long long k);
    static ConstructionSpec h2(long long n, long long p, long long a, long long k);
    static ConstructionSpec h2rd(long long n, long long p, long long a, long long d, long long k);

    friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

// Part sizes of the Turan partition of n into r parts, descending.
std::vector<int> turan_parts(int n, int r);

Graph turan_graph(int n, int r);

// Almost d-regular graph: every vertex of degree d except, when n*d is odd,
// one vertex of degree d-1. Deterministic circulant realization.
Graph almost_regular(int n, int d);

// Adds the payload's edges inside class `class_index` (1-based) of the
// complete multipartite graph with the given part sizes, on that class's
// lowest-indexed vertices.
Graph embed_in_class(const std::vector<int>& parts, int class_index, const Graph& payload);

// Materializes a spec. For the L/H kinds, payload_class picks which class of
// the Turan partition hosts the payload (1-based; 1 = largest).
Graph build_construction(const ConstructionSpec& spec, int payload_class = 1);

// Smallest n for which the spec is feasible (payload fits its class).
long long min_feasible_n(const ConstructionSpec& spec);

// Edge blow-up: replace each edge of f by a clique on q vertices; the q-2
// added vertices of each clique are fresh. Original vertices keep their
// labels; fresh blocks are appended in sorted edge order.
Graph edge_blowup(const Graph& f, int q);

struct BlowupEmbedding {
    Graph host;     // (matching of l edges) joined with K(2(p-1)l; p-1)
    Graph pattern;  // edge_blowup(t, p+1)
    std::vector<int> map;
};

// Constructive embedding of the blow-up of t into the matching-join host,
// l = |V(pattern)|. Requires p >= 3.
BlowupEmbedding embed_blowup_in_matching_join(const Tree& t, int p);

}  // namespace turan
