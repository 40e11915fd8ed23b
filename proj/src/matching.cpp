#include "turan/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turan/canonical.hpp"

namespace turan {

namespace {

// One phase of the blossom search: find an alternating tree from root,
// contracting blossoms via the base[] array, and augment on success.
class BlossomSearch {
public:
    BlossomSearch(const Graph& g, std::vector<int>& match) : g_(g), match_(match), n_(g.order()) {}

    bool augment_from(int root) {
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        in_tree_.assign(n_, false);
        queue_.clear();
        push(root);
        for (size_t qi = 0; qi < queue_.size(); ++qi) {
            int v = queue_[qi];
            int to = -1;
            g_.neighbors(v).for_each([&](int w) { candidates_.push_back(w); });
            for (int w : candidates_) {
                if (base_[v] == base_[w] || match_[v] == w) continue;
                if (w == root || (match_[w] != -1 && parent_[match_[w]] != -1)) {
                    contract_blossom(v, w);
                } else if (parent_[w] == -1) {
                    parent_[w] = v;
                    if (match_[w] == -1) {
                        to = w;
                        break;
                    }
                    push(match_[w]);
                }
            }
            candidates_.clear();
            if (to != -1) {
                augment_path(to);
                return true;
            }
        }
        return false;
    }

private:
    void push(int v) {
        if (!in_tree_[v]) {
            in_tree_[v] = true;
            queue_.push_back(v);
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<bool> mark(n_, false);
        int x = a;
        while (true) {
            x = base_[x];
            mark[x] = true;
            if (match_[x] == -1) break;
            x = parent_[match_[x]];
        }
        int y = b;
        while (true) {
            y = base_[y];
            if (mark[y]) return y;
            y = parent_[match_[y]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void contract_blossom(int v, int w) {
        int b = lowest_common_base(v, w);
        std::vector<bool> in_blossom(n_, false);
        mark_path(v, b, w, in_blossom);
        mark_path(w, b, v, in_blossom);
        for (int i = 0; i < n_; ++i)
            if (in_blossom[base_[i]]) {
                base_[i] = b;
                push(i);
            }
    }

    void augment_path(int to) {
        while (to != -1) {
            int pv = parent_[to];
            int next = match_[pv];
            match_[to] = pv;
            match_[pv] = to;
            to = next;
        }
    }

    const Graph& g_;
    std::vector<int>& match_;
    int n_;
    std::vector<int> parent_, base_, queue_, candidates_;
    std::vector<bool> in_tree_;
};

}  // namespace

bool try_augment(const Graph& g, std::vector<int>& match, int root) {
    return BlossomSearch(g, match).augment_from(root);
}

MatchingWitness max_matching(const Graph& g) {
    int n = g.order();
    std::vector<int> match(n, -1);
    // Greedy warm start.
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int w = -1;
        g.neighbors(v).for_each([&](int u) {
            if (w == -1 && match[u] == -1) w = u;
        });
        if (w != -1) {
            match[v] = w;
            match[w] = v;
        }
    }
    for (int v = 0; v < n; ++v)
        if (match[v] == -1) try_augment(g, match, v);
    MatchingWitness res;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) res.edges.emplace_back(v, match[v]);
    res.size = static_cast<int>(res.edges.size());
    return res;
}

int matching_number(const Graph& g) { return max_matching(g).size; }

BipartiteCertificate bipartite_cover(const Graph& g, const VertexSet& side_x) {
    int n = g.order();
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) {
            if (side_x.test(v) == side_x.test(w))
                throw std::invalid_argument("graph is not bipartite with the given side");
        });

    // Kuhn augmentation from X.
    std::vector<int> match(n, -1);
    std::vector<bool> visited(n, false);
    auto kuhn = [&](auto&& self, int x) -> bool {
        bool found = false;
        g.neighbors(x).for_each([&](int y) {
            if (found || visited[y]) return;
            visited[y] = true;
            if (match[y] == -1 || self(self, match[y])) {
                match[y] = x;
                match[x] = y;
                found = true;
            }
        });
        return found;
    };
    for (int x = 0; x < n; ++x)
        if (side_x.test(x) && match[x] == -1) {
            std::fill(visited.begin(), visited.end(), false);
            kuhn(kuhn, x);
        }

    BipartiteCertificate cert;
    for (int x = 0; x < n; ++x)
        if (side_x.test(x) && match[x] != -1) cert.matching.emplace_back(x, match[x]);

    // Alternating reachability from unmatched X vertices: non-matching edges
    // X -> Y, matching edges Y -> X.
    VertexSet z;
    std::vector<int> stack;
    for (int x = 0; x < n; ++x)
        if (side_x.test(x) && match[x] == -1) {
            z.set(x);
            stack.push_back(x);
        }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (side_x.test(v)) {
            g.neighbors(v).for_each([&](int y) {
                if (match[v] != y && !z.test(y)) {
                    z.set(y);
                    stack.push_back(y);
                }
            });
        } else if (match[v] != -1 && !z.test(match[v])) {
            z.set(match[v]);
            stack.push_back(match[v]);
        }
    }

    // Konig cover: (X \ Z) union (Y intersect Z).
    for (int v = 0; v < n; ++v)
        if (side_x.test(v) ? !z.test(v) : z.test(v)) cert.cover.push_back(v);

    bool saturated = true;
    for (int x = 0; x < n; ++x)
        if (side_x.test(x) && match[x] == -1) saturated = false;
    if (!saturated) {
        std::vector<int> violator;
        for (int x = 0; x < n; ++x)
            if (side_x.test(x) && z.test(x)) violator.push_back(x);
        cert.hall_violator = std::move(violator);
    }
    return cert;
}

namespace {

// Max clique on the complement with greedy-coloring bound.
class MisSolver {
public:
    explicit MisSolver(const Graph& g) : n_(g.order()) {
        comp_.resize(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && !g.has_edge(u, v)) comp_[u].set(v);
    }

    int solve() {
        std::vector<int> cand(n_);
        std::iota(cand.begin(), cand.end(), 0);
        expand(cand, 0);
        return best_;
    }

private:
    void expand(std::vector<int>& cand, int size) {
        if (cand.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        // Greedy coloring bound; vertices ordered by color ascending.
        std::vector<int> color(cand.size()), order;
        order.reserve(cand.size());
        {
            std::vector<VertexSet> classes;
            for (int v : cand) {
                size_t c = 0;
                while (c < classes.size() && classes[c].intersects(comp_[v])) ++c;
                if (c == classes.size()) classes.emplace_back();
                classes[c].set(v);
            }
            for (size_t c = 0; c < classes.size(); ++c)
                classes[c].for_each([&](int v) {
                    color[order.size()] = static_cast<int>(c) + 1;
                    order.push_back(v);
                });
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + color[i] <= best_) return;
            int v = order[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (comp_[v].test(order[j])) next.push_back(order[j]);
            expand(next, size + 1);
        }
    }

    int n_;
    int best_ = 0;
    std::vector<VertexSet> comp_;
};

}  // namespace

int independence_number(const Graph& g, int cap) {
    if (g.order() > cap) throw std::invalid_argument("independence number: size bound exceeded");
    return MisSolver(g).solve();
}

GallaiEdmondsRecord gallai_edmonds(const Graph& g) {
    int n = g.order();
    GallaiEdmondsRecord rec;
    rec.matching = max_matching(g);
    rec.nu = rec.matching.size;

    std::vector<int> match(n, -1);
    for (auto [u, v] : rec.matching.edges) {
        match[u] = v;
        match[v] = u;
    }

    // D = vertices missed by some maximum matching: v in D iff v is unmatched,
    // or dropping its matching edge leaves a matching of g - v that still
    // augments from the freed partner.
    VertexSet d_set;
    for (int v = 0; v < n; ++v) {
        if (match[v] == -1) {
            d_set.set(v);
            continue;
        }
        int partner = match[v];
        Graph h = g.with_vertex_removed(v);
        std::vector<int> m2(n - 1, -1);
        auto shift = [v](int u) { return u > v ? u - 1 : u; };
        for (int u = 0; u < n; ++u)
            if (u != v && match[u] != -1 && match[u] != v) m2[shift(u)] = shift(match[u]);
        if (try_augment(h, m2, shift(partner))) d_set.set(v);
    }

    VertexSet s_set;
    d_set.for_each([&](int v) {
        g.neighbors(v).for_each([&](int w) {
            if (!d_set.test(w)) s_set.set(w);
        });
    });
    s_set.for_each([&](int v) { rec.S.push_back(v); });

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!s_set.test(v)) rest.push_back(v);
    Graph gs = g.induced(rest);
    for (const auto& comp : gs.components()) {
        std::vector<int> orig;
        orig.reserve(comp.size());
        for (int v : comp) orig.push_back(rest[v]);
        if (d_set.test(orig[0]))
            rec.odd_components.push_back(std::move(orig));
        else
            rec.even_components.push_back(std::move(orig));
    }
    return rec;
}

}  // namespace turan
