#include "turan/containment.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "turan/canonical.hpp"
#include "turan/matching.hpp"

namespace turan {

ForbiddenFamily aux_family(int k) {
    if (k < 2) throw std::invalid_argument("aux family needs k >= 2");
    ForbiddenFamily fam;
    fam.name = "aux:k=" + std::to_string(k);
    fam.patterns.push_back(graphs::star(k));
    fam.patterns.push_back(disjoint_union(std::vector<Graph>(k, graphs::complete(2))));
    fam.patterns.push_back(disjoint_union({graphs::star(k - 1), graphs::star(k - 1)}));
    return fam;
}

ForbiddenFamily ahs_family(int k) {
    if (k < 1) throw std::invalid_argument("ahs family needs k >= 1");
    ForbiddenFamily fam;
    fam.name = "ahs:k=" + std::to_string(k);
    fam.patterns.push_back(graphs::star(k));
    fam.patterns.push_back(disjoint_union(std::vector<Graph>(k, graphs::complete(2))));
    return fam;
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pattern.order()) return false;
    VertexSet used;
    for (int x : map) {
        if (x < 0 || x >= host.order() || used.test(x)) return false;
        used.set(x);
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(map[u], map[v])) return false;
    return true;
}

namespace {

// Min-remaining-domain backtracking with forward checking. Domains are host
// bitsets; assigning u -> x removes x everywhere and intersects the domains
// of u's pattern neighbors with N(x).
class SubgraphSearch {
public:
    SubgraphSearch(const Graph& host, const Graph& pattern, uint64_t budget, bool host_symmetry)
        : host_(host), pattern_(pattern), budget_(budget), np_(pattern.order()), nh_(host.order()) {
        host_symmetry_ = host_symmetry;
    }

    FindResult run() {
        FindResult res;
        if (np_ > nh_ || pattern_.edge_count() > host_.edge_count()) return res;
        // Sorted degree dominance: i-th largest pattern degree must fit.
        {
            std::vector<int> dp(np_), dh(nh_);
            for (int u = 0; u < np_; ++u) dp[u] = pattern_.degree(u);
            for (int x = 0; x < nh_; ++x) dh[x] = host_.degree(x);
            std::sort(dp.rbegin(), dp.rend());
            std::sort(dh.rbegin(), dh.rend());
            for (int i = 0; i < np_; ++i)
                if (dp[i] > dh[i]) return res;
        }
        if (np_ == 0) {
            res.outcome = FindOutcome::Found;
            res.embedding = Embedding{};
            return res;
        }

        domains_.assign(static_cast<size_t>(np_) * (np_ + 1), VertexSet{});
        VertexSet all = VertexSet::range(nh_);
        for (int u = 0; u < np_; ++u) {
            VertexSet dom;
            int du = pattern_.degree(u);
            all.for_each([&](int x) {
                if (host_.degree(x) >= du) dom.set(x);
            });
            dom_at(0)[u] = dom;
        }
        // First variable: max degree (ties: lowest index); optionally shrink
        // its domain to one representative per host automorphism orbit.
        first_var_ = 0;
        for (int u = 1; u < np_; ++u)
            if (pattern_.degree(u) > pattern_.degree(first_var_)) first_var_ = u;
        if (host_symmetry_) {
            VertexSet reps;
            for (int r : orbit_representatives(host_)) reps.set(r);
            dom_at(0)[first_var_] &= reps;
        }

        for (auto [u, v] : pattern_.edges()) pattern_edges_.emplace_back(u, v);
        compute_host_twins();
        map_.assign(np_, -1);
        assigned_.assign(np_, false);
        nodes_ = 0;
        FindOutcome outcome = search(0);
        res.outcome = outcome;
        res.nodes = nodes_;
        if (outcome == FindOutcome::Found) res.embedding = Embedding{map_};
        return res;
    }

private:
    VertexSet* dom_at(int depth) { return domains_.data() + static_cast<size_t>(depth) * np_; }

    // Host vertices with identical open (resp. closed) neighborhoods are
    // interchangeable by a transposition fixing everything else, so per node
    // one candidate per twin class suffices. The two relations must stay
    // separate: chaining an open twin with a closed twin is not an
    // automorphism.
    void compute_host_twins() {
        open_id_.resize(nh_);
        closed_id_.resize(nh_);
        std::map<VertexSet, int> open_key, closed_key;
        for (int x = 0; x < nh_; ++x) {
            VertexSet open = host_.neighbors(x);
            VertexSet closed = open;
            closed.set(x);
            open_id_[x] = open_key.emplace(open, static_cast<int>(open_key.size())).first->second;
            closed_id_[x] = closed_key.emplace(closed, static_cast<int>(closed_key.size())).first->second;
        }
    }

    FindOutcome search(int depth) {
        if (depth == np_) return FindOutcome::Found;
        VertexSet* dom = dom_at(depth);

        int u = -1;
        if (depth == 0) {
            u = first_var_;
        } else {
            // Smallest domain; ties go to the higher pattern degree.
            int best = kMaxVertices + 1, best_deg = -1;
            for (int w = 0; w < np_; ++w) {
                if (assigned_[w]) continue;
                int c = dom[w].count();
                int d = pattern_.degree(w);
                if (c < best || (c == best && d > best_deg)) {
                    best = c;
                    best_deg = d;
                    u = w;
                }
            }
        }
        if (dom[u].none()) return FindOutcome::NotFound;

        VertexSet* child = dom_at(depth + 1);
        VertexSet tried_open, tried_closed;
        for (int x = dom[u].find_first(); x != -1; x = dom[u].find_next(x)) {
            if (tried_open.test(open_id_[x]) || tried_closed.test(closed_id_[x])) continue;
            tried_open.set(open_id_[x]);
            tried_closed.set(closed_id_[x]);
            if (++nodes_ > budget_) return FindOutcome::BudgetExceeded;
            std::copy(dom, dom + np_, child);
            bool dead = false;
            for (int w = 0; w < np_ && !dead; ++w) {
                if (assigned_[w] || w == u) continue;
                child[w].reset(x);
                if (pattern_.has_edge(u, w)) child[w] &= host_.neighbors(x);
                if (child[w].none()) dead = true;
            }
            // Every unassigned pattern edge still needs a supporting host
            // edge between its two domains.
            for (size_t i = 0; i < pattern_edges_.size() && !dead; ++i) {
                auto [w1, w2] = pattern_edges_[i];
                if (assigned_[w1] || assigned_[w2] || w1 == u || w2 == u) continue;
                bool support = false;
                const VertexSet& d2 = child[w2];
                for (int y = child[w1].find_first(); y != -1 && !support; y = child[w1].find_next(y))
                    support = host_.neighbors(y).intersects(d2);
                dead = !support;
            }
            if (dead) continue;
            map_[u] = x;
            assigned_[u] = true;
            FindOutcome sub = search(depth + 1);
            if (sub != FindOutcome::NotFound) return sub;
            assigned_[u] = false;
            map_[u] = -1;
        }
        return FindOutcome::NotFound;
    }

    const Graph& host_;
    const Graph& pattern_;
    uint64_t budget_;
    int np_, nh_;
    bool host_symmetry_;
    int first_var_ = 0;
    uint64_t nodes_ = 0;
    std::vector<VertexSet> domains_;  // (np+1) levels of np domains
    std::vector<std::pair<int, int>> pattern_edges_;
    std::vector<int> open_id_, closed_id_;
    std::vector<int> map_;
    std::vector<bool> assigned_;
};

// Structural classification for the fast paths.
struct StarShape {
    int t;  // K_{1,t}
};
struct MatchingShape {
    int t;  // t*K_2
};
struct DoubleStarShape {
    int t;  // 2*K_{1,t}
};

std::optional<StarShape> as_star(const Graph& g) {
    int n = g.order();
    if (n < 2 || g.edge_count() != n - 1) return std::nullopt;
    if (g.max_degree() != n - 1) return std::nullopt;
    return StarShape{n - 1};
}

std::optional<MatchingShape> as_matching(const Graph& g) {
    int n = g.order();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    if (g.max_degree() != 1 || g.min_degree() != 1) return std::nullopt;
    return MatchingShape{n / 2};
}

std::optional<DoubleStarShape> as_double_star(const Graph& g) {
    auto comps = g.components();
    if (comps.size() != 2 || comps[0].size() != comps[1].size()) return std::nullopt;
    int t = static_cast<int>(comps[0].size()) - 1;
    if (t < 2) return std::nullopt;  // K_{1,1} pairs are matchings
    for (const auto& comp : comps) {
        auto sub = g.induced(comp);
        if (!as_star(sub)) return std::nullopt;
    }
    return DoubleStarShape{t};
}

// Two vertex-disjoint stars K_{1,t} exist iff some pair u, v has t usable
// leaves each and 2t usable leaves combined.
std::optional<Embedding> find_double_star(const Graph& host, int t) {
    int n = host.order();
    for (int u = 0; u < n; ++u) {
        if (host.degree(u) < t) continue;
        for (int v = u + 1; v < n; ++v) {
            if (host.degree(v) < t) continue;
            VertexSet nu = host.neighbors(u);
            VertexSet nv = host.neighbors(v);
            nu.reset(v);
            nv.reset(u);
            if (nu.count() < t || nv.count() < t) continue;
            VertexSet both = nu | nv;
            both.reset(u);
            both.reset(v);
            if (both.count() < 2 * t) continue;
            // Private leaves first, shared ones fill the rest.
            Embedding emb;
            emb.map.assign(2 * (t + 1), -1);
            emb.map[0] = u;
            emb.map[t + 1] = v;
            VertexSet shared = nu & nv;
            VertexSet taken;
            taken.set(u);
            taken.set(v);
            int placed = 0;
            (nu - shared).for_each([&](int x) {
                if (placed < t) {
                    emb.map[1 + placed++] = x;
                    taken.set(x);
                }
            });
            shared.for_each([&](int x) {
                if (placed < t && !taken.test(x)) {
                    emb.map[1 + placed++] = x;
                    taken.set(x);
                }
            });
            placed = 0;
            (nv - taken).for_each([&](int x) {
                if (placed < t) {
                    emb.map[t + 2 + placed++] = x;
                    taken.set(x);
                }
            });
            return emb;
        }
    }
    return std::nullopt;
}

FindResult decide_pattern(const Graph& host, const Graph& pattern, uint64_t budget) {
    if (auto star = as_star(pattern)) {
        FindResult res;
        for (int v = 0; v < host.order(); ++v) {
            if (host.degree(v) >= star->t) {
                Embedding emb;
                emb.map.push_back(v);
                host.neighbors(v).for_each([&](int w) {
                    if (static_cast<int>(emb.map.size()) <= star->t) emb.map.push_back(w);
                });
                res.outcome = FindOutcome::Found;
                res.embedding = std::move(emb);
                return res;
            }
        }
        return res;
    }
    if (auto m = as_matching(pattern)) {
        FindResult res;
        MatchingWitness wit = max_matching(host);
        if (wit.size >= m->t) {
            Embedding emb;
            for (int i = 0; i < m->t; ++i) {
                emb.map.push_back(wit.edges[i].first);
                emb.map.push_back(wit.edges[i].second);
            }
            res.outcome = FindOutcome::Found;
            res.embedding = std::move(emb);
        }
        return res;
    }
    if (auto ds = as_double_star(pattern)) {
        FindResult res;
        if (auto emb = find_double_star(host, ds->t)) {
            res.outcome = FindOutcome::Found;
            res.embedding = std::move(emb);
        }
        return res;
    }
    return find_subgraph(host, pattern, budget);
}

}  // namespace

FindResult find_subgraph(const Graph& host, const Graph& pattern, uint64_t budget, bool use_host_symmetry) {
    return SubgraphSearch(host, pattern, budget, use_host_symmetry).run();
}

FreeResult is_free(const Graph& host, const ForbiddenFamily& family, uint64_t budget) {
    std::vector<int> order(family.patterns.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return family.patterns[i].edge_count() < family.patterns[j].edge_count();
    });
    FreeResult res;
    bool unknown = false;
    for (int idx : order) {
        FindResult fr = decide_pattern(host, family.patterns[idx], budget);
        res.nodes += fr.nodes;
        if (fr.outcome == FindOutcome::Found) {
            res.status = FreeStatus::NotFree;
            res.pattern_index = idx;
            res.witness = std::move(fr.embedding);
            return res;
        }
        if (fr.outcome == FindOutcome::BudgetExceeded) unknown = true;
    }
    res.status = unknown ? FreeStatus::Unknown : FreeStatus::Free;
    return res;
}

FreeResult is_splitfamily_free(const Graph& host, const Graph& tree, uint64_t budget, size_t family_cap) {
    auto family = splitting_family(tree, nullptr, family_cap);
    int host_nu = matching_number(host);
    int host_delta = host.max_degree();
    FreeResult res;
    bool unknown = false;
    for (size_t i = 0; i < family.size(); ++i) {
        const Graph& member = family[i];
        if (member.order() > host.order()) continue;
        if (member.max_degree() > host_delta) continue;
        if (matching_number(member) > host_nu) continue;
        FindResult fr = find_subgraph(host, member, budget);
        res.nodes += fr.nodes;
        if (fr.outcome == FindOutcome::Found) {
            res.status = FreeStatus::NotFree;
            res.pattern_index = static_cast<int>(i);
            res.witness = std::move(fr.embedding);
            return res;
        }
        if (fr.outcome == FindOutcome::BudgetExceeded) unknown = true;
    }
    res.status = unknown ? FreeStatus::Unknown : FreeStatus::Free;
    return res;
}

}  // namespace turan
