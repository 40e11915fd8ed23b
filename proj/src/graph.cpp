#include "turan/graph.hpp"

#include <stdexcept>

namespace turan {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > kMaxVertices) throw std::length_error("vertex capacity exceeded");
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += adj_[v].count();
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    adj_[u].reset(v);
    adj_[v].reset(u);
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = kMaxVertices;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) es.emplace_back(u, v);
        });
    return es;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    VertexSet seen;
    for (int s = 0; s < n_; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (size_t i = 0; i < comp.size(); ++i) {
            adj_[comp[i]].for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph Graph::with_vertex_removed(int v) const {
    std::vector<int> verts;
    verts.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) verts.push_back(u);
    return induced(verts);
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(new_label[u], new_label[v]);
    return h;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > kMaxVertices) throw std::length_error("vertex capacity exceeded");
    Graph h(n1 + n2);
    for (auto [u, v] : g1.edges()) h.add_edge(u, v);
    for (auto [u, v] : g2.edges()) h.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) h.add_edge(u, n1 + v);
    return h;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    int n = 0;
    for (const Graph& g : gs) n += g.order();
    if (n > kMaxVertices) throw std::length_error("vertex capacity exceeded");
    Graph h(n);
    int off = 0;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges()) h.add_edge(off + u, off + v);
        off += g.order();
    }
    return h;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("part sizes must be non-negative");
        n += p;
    }
    Graph g(n);
    int off_i = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int off_j = off_i + parts[i];
        for (size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v) g.add_edge(off_i + u, off_j + v);
            off_j += parts[j];
        }
        off_i += parts[i];
    }
    return g;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

}  // namespace graphs

}  // namespace turan
