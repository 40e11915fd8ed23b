#include "turan/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/graph6.hpp"

namespace turan {

Tree analyze_tree(const Graph& g, bool swap_equal_classes) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("not a tree: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("not a tree: disconnected");
    if (g.edge_count() != n - 1) throw std::invalid_argument("not a tree: has a cycle");

    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        g.neighbors(v).for_each([&](int w) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            }
        });
    }

    std::vector<int> side[2];
    for (int v = 0; v < n; ++v) side[color[v]].push_back(v);

    int a_color;
    if (side[0].size() != side[1].size())
        a_color = side[0].size() < side[1].size() ? 0 : 1;
    else
        a_color = swap_equal_classes ? 1 : 0;  // vertex 0 has color 0

    return Tree{g, std::move(side[a_color]), std::move(side[1 - a_color])};
}

TreeParams extract_params(const Tree& t) {
    if (t.class_a.empty()) throw std::invalid_argument("tree has an empty class A");
    TreeParams p;
    p.a = static_cast<int>(t.class_a.size());
    p.k = kMaxVertices;
    for (int v : t.class_a) p.k = std::min(p.k, t.graph.degree(v));
    for (int v : t.class_a)
        if (t.graph.degree(v) == p.k) p.a0.push_back(v);
    VertexSet a0_set;
    for (int v : p.a0) a0_set.set(v);
    for (int v : t.class_b)
        if ((t.graph.neighbors(v) & a0_set).count() >= 2) p.b0.push_back(v);
    if (!p.b0.empty()) {
        int min_deg = kMaxVertices;
        for (int v : p.b0) min_deg = std::min(min_deg, t.graph.degree(v));
        p.b = min_deg - 2;
    }
    return p;
}

Graph split_vertex(const Graph& g, int v) {
    int n = g.order();
    if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
    int d = g.degree(v);
    if (d == 0) throw std::invalid_argument("cannot split an isolated vertex");
    if (n - 1 + d > kMaxVertices) throw std::length_error("vertex capacity exceeded");

    Graph h(n - 1 + d);
    auto shift = [v](int u) { return u > v ? u - 1 : u; };
    for (auto [x, y] : g.edges())
        if (x != v && y != v) h.add_edge(shift(x), shift(y));
    int next = n - 1;
    g.neighbors(v).for_each([&](int w) { h.add_edge(shift(w), next++); });
    return h;
}

namespace {

// Split every vertex of U simultaneously: each edge survives as one edge
// between per-edge copies of its split endpoints. Equivalent to splitting
// the vertices of U one by one in any order.
Graph split_subset(const Graph& g, const VertexSet& u_set) {
    int n = g.order();
    std::vector<int> base(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!u_set.test(v)) base[v] = next++;
    auto es = g.edges();
    int order = next;
    for (auto [x, y] : es) order += (u_set.test(x) ? 1 : 0) + (u_set.test(y) ? 1 : 0);
    if (order > kMaxVertices) throw std::length_error("vertex capacity exceeded");
    Graph h(order);
    for (auto [x, y] : es) {
        int hx = u_set.test(x) ? next++ : base[x];
        int hy = u_set.test(y) ? next++ : base[y];
        h.add_edge(hx, hy);
    }
    return h;
}

}  // namespace

std::vector<Graph> splitting_family(const Graph& g, const std::vector<int>* restrict_to, size_t cap) {
    int n = g.order();
    auto comps = g.components();
    if (g.edge_count() != n - static_cast<int>(comps.size()))
        throw std::invalid_argument("splitting family requires a forest");

    // Splitting a vertex of degree <= 1 never changes the isomorphism class,
    // so only degree >= 2 vertices drive the enumeration.
    std::vector<int> eligible;
    if (restrict_to) {
        for (int v : *restrict_to) {
            if (v < 0 || v >= n) throw std::out_of_range("restrict vertex out of range");
            if (g.degree(v) >= 2) eligible.push_back(v);
        }
        std::sort(eligible.begin(), eligible.end());
        eligible.erase(std::unique(eligible.begin(), eligible.end()), eligible.end());
    } else {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 2) eligible.push_back(v);
    }
    if (eligible.size() > 30) throw std::runtime_error("splitting family budget exceeded");

    std::map<std::string, Graph> family;
    for (uint64_t mask = 0; mask < (uint64_t{1} << eligible.size()); ++mask) {
        VertexSet u_set;
        for (size_t i = 0; i < eligible.size(); ++i)
            if ((mask >> i) & 1) u_set.set(eligible[i]);
        Graph split = split_subset(g, u_set);
        Graph canon = canonical_copy(split);
        family.emplace(graph6_encode(canon), std::move(canon));
        if (family.size() > cap) throw std::runtime_error("splitting family budget exceeded");
    }
    std::vector<Graph> out;
    out.reserve(family.size());
    for (auto& [key, graph] : family) out.push_back(std::move(graph));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw std::invalid_argument("edge list: expected two vertices per line");
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex");
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    return graphs::from_edges(max_v + 1, edges);
}

}  // namespace turan
