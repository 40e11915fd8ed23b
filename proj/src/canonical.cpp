#include "turan/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turan/graph6.hpp"

namespace turan {

namespace {

// Ordered partition: order[pos] = vertex; cell_len[pos] > 0 iff pos starts a
// cell. Cell starts never move when cells split, so queued splitter starts
// stay valid.
struct Part {
    std::vector<int> order;
    std::vector<int> cell_len;
};

class Searcher {
public:
    explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

    CanonResult run() {
        CanonResult res;
        if (n_ == 0) return res;
        Part p;
        p.order.resize(n_);
        std::iota(p.order.begin(), p.order.end(), 0);
        p.cell_len.assign(n_, 0);
        p.cell_len[0] = n_;
        std::vector<int> worklist{0};
        refine(p, worklist);
        std::vector<int> fixed;
        search(p, fixed);
        res.new_label.assign(n_, 0);
        for (int pos = 0; pos < n_; ++pos) res.new_label[best_order_[pos]] = pos;
        res.generators = std::move(gens_);
        return res;
    }

private:
    using Bits = std::vector<uint64_t>;

    void refine(Part& p, std::vector<int>& worklist) {
        while (!worklist.empty()) {
            int s = worklist.back();
            worklist.pop_back();
            VertexSet splitter;
            for (int i = s; i < s + p.cell_len[s]; ++i) splitter.set(p.order[i]);
            for (int cs = 0; cs < n_;) {
                int cl = p.cell_len[cs];
                if (cl > 1) split_cell(p, cs, cl, splitter, worklist);
                cs += cl;
            }
        }
    }

    // Split cell [cs, cs+cl) by |N(v) & splitter|, sub-cells ordered by count
    // ascending, stable within. New fragment starts are queued.
    void split_cell(Part& p, int cs, int cl, const VertexSet& splitter,
                    std::vector<int>& worklist) {
        int lo = kMaxVertices + 1, hi = -1;
        cnt_.resize(n_);
        for (int i = cs; i < cs + cl; ++i) {
            int c = (g_.neighbors(p.order[i]) & splitter).count();
            cnt_[p.order[i]] = c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (lo == hi) return;
        scratch_.clear();
        for (int c = lo; c <= hi; ++c)
            for (int i = cs; i < cs + cl; ++i)
                if (cnt_[p.order[i]] == c) scratch_.push_back(p.order[i]);
        int pos = cs;
        for (int c = lo; c <= hi; ++c) {
            int len = 0;
            for (int i = cs; i < cs + cl; ++i)
                if (cnt_[p.order[i]] == c) ++len;
            if (len == 0) continue;
            p.cell_len[pos] = len;
            worklist.push_back(pos);
            pos += len;
        }
        std::copy(scratch_.begin(), scratch_.end(), p.order.begin() + cs);
    }

    int first_nonsingleton(const Part& p) const {
        for (int cs = 0; cs < n_;) {
            int cl = p.cell_len[cs];
            if (cl > 1) return cs;
            cs += cl;
        }
        return -1;
    }

    void search(const Part& p, std::vector<int>& fixed) {
        if (++nodes_ > kNodeCap) throw std::runtime_error("canonical labeling search exploded");
        int cs = first_nonsingleton(p);
        if (cs < 0) {
            leaf(p);
            return;
        }
        std::vector<int> cell(p.order.begin() + cs, p.order.begin() + cs + p.cell_len[cs]);
        std::vector<int> explored;
        size_t gens_seen = SIZE_MAX;
        std::vector<int> uf;
        for (int v : cell) {
            if (gens_seen != gens_.size()) {
                uf = stabilizer_orbits(fixed);
                gens_seen = gens_.size();
            }
            bool skip = false;
            for (int w : explored)
                if (uf_find(uf, w) == uf_find(uf, v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            explored.push_back(v);
            Part child = p;
            auto it = std::find(child.order.begin() + cs, child.order.begin() + cs + p.cell_len[cs], v);
            std::swap(*it, child.order[cs]);
            int cl = p.cell_len[cs];
            child.cell_len[cs] = 1;
            child.cell_len[cs + 1] = cl - 1;
            std::vector<int> worklist{cs, cs + 1};
            refine(child, worklist);
            fixed.push_back(v);
            search(child, fixed);
            fixed.pop_back();
        }
    }

    void leaf(const Part& p) {
        Bits bits = adjacency_bits(p.order);
        if (!have_best_ || bits < best_bits_) {
            best_bits_ = std::move(bits);
            best_order_ = p.order;
            have_best_ = true;
        } else if (bits == best_bits_) {
            // Two labelings producing identical strings compose to an
            // automorphism of g.
            std::vector<int> gamma(n_);
            for (int pos = 0; pos < n_; ++pos) gamma[p.order[pos]] = best_order_[pos];
            bool identity = true;
            for (int v = 0; v < n_; ++v)
                if (gamma[v] != v) {
                    identity = false;
                    break;
                }
            if (!identity) gens_.push_back(std::move(gamma));
        }
    }

    // Adjacency upper triangle (graph6 bit order) under order[pos] = vertex,
    // packed MSB-first so lexicographic word compare is bit compare.
    Bits adjacency_bits(const std::vector<int>& order) const {
        Bits bits((static_cast<size_t>(n_) * (n_ - 1) / 2 + 63) / 64, 0);
        size_t b = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if (g_.has_edge(order[i], order[j]))
                    bits[b >> 6] |= uint64_t{1} << (63 - (b & 63));
        return bits;
    }

    static int uf_find(std::vector<int>& uf, int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    }

    // Union-find over vertices merged by generators fixing `fixed` pointwise.
    std::vector<int> stabilizer_orbits(const std::vector<int>& fixed) const {
        std::vector<int> uf(n_);
        std::iota(uf.begin(), uf.end(), 0);
        for (const auto& gen : gens_) {
            bool ok = true;
            for (int f : fixed)
                if (gen[f] != f) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int v = 0; v < n_; ++v) {
                int a = uf_find(uf, v), b = uf_find(uf, gen[v]);
                if (a != b) uf[a] = b;
            }
        }
        return uf;
    }

    static constexpr uint64_t kNodeCap = 200'000'000;

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    Bits best_bits_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> gens_;
    std::vector<int> cnt_, scratch_;
    uint64_t nodes_ = 0;
};

}  // namespace

CanonResult canonical_labeling(const Graph& g) { return Searcher(g).run(); }

Graph canonical_copy(const Graph& g) {
    if (g.order() == 0) return g;
    return g.relabeled(canonical_labeling(g).new_label);
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{graph6_encode(canonical_copy(g))}; }

std::vector<int> orbit_representatives(const Graph& g) {
    CanonResult res = canonical_labeling(g);
    int n = g.order();
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    for (const auto& gen : res.generators)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(gen[v]);
            if (a != b) uf[a] = b;
        }
    std::vector<int> lowest(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (lowest[r] < 0) lowest[r] = v;
    }
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (lowest[find(v)] == v) reps.push_back(v);
    return reps;
}

}  // namespace turan
