#include "turan/constructions.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

const std::map<ConstructionSpec::Kind, std::string> kKindNames{
    {ConstructionSpec::Kind::Turan, "TURAN"},
    {ConstructionSpec::Kind::AlmostRegular, "R"},
    {ConstructionSpec::Kind::CompleteMultipartite, "K"},
    {ConstructionSpec::Kind::L1, "L1"},
    {ConstructionSpec::Kind::L2, "L2"},
    {ConstructionSpec::Kind::H1, "H1"},
    {ConstructionSpec::Kind::H2, "H2"},
    {ConstructionSpec::Kind::H2RD, "H2R"},
};

int checked_int(long long v, const char* what) {
    if (v < 0 || v > kMaxVertices) throw std::invalid_argument(std::string(what) + " out of range");
    return static_cast<int>(v);
}

}  // namespace

std::string ConstructionSpec::to_text() const {
    std::ostringstream out;
    out << kKindNames.at(kind);
    switch (kind) {
        case Kind::Turan:
            out << " n=" << n << " r=" << r;
            break;
        case Kind::AlmostRegular:
            out << " n=" << n << " d=" << d;
            break;
        case Kind::CompleteMultipartite: {
            out << " parts=";
            for (size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
            break;
        }
        case Kind::L1:
        case Kind::L2:
            out << " n=" << n << " p=" << p << " k=" << k;
            break;
        case Kind::H1:
        case Kind::H2:
            out << " n=" << n << " p=" << p << " a=" << a << " k=" << k;
            break;
        case Kind::H2RD:
            out << " n=" << n << " p=" << p << " a=" << a << " d=" << d << " k=" << k;
            break;
    }
    return out.str();
}

ConstructionSpec ConstructionSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    if (!(in >> head)) throw std::invalid_argument("construction spec: empty");
    ConstructionSpec spec;
    bool found = false;
    for (const auto& [kind, name] : kKindNames)
        if (name == head) {
            spec.kind = kind;
            found = true;
        }
    if (!found) throw std::invalid_argument("construction spec: unknown kind '" + head + "'");

    std::string field;
    while (in >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("construction spec: expected key=value, got '" + field + "'");
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "parts") {
            std::istringstream ps(value);
            std::string item;
            while (std::getline(ps, item, ',')) spec.parts.push_back(std::stoi(item));
        } else {
            long long v = std::stoll(value);
            if (key == "n")
                spec.n = v;
            else if (key == "r")
                spec.r = v;
            else if (key == "d")
                spec.d = v;
            else if (key == "p")
                spec.p = v;
            else if (key == "a")
                spec.a = v;
            else if (key == "k")
                spec.k = v;
            else
                throw std::invalid_argument("construction spec: unknown key '" + key + "'");
        }
    }
    return spec;
}

ConstructionSpec ConstructionSpec::turan(long long n, long long r) {
    ConstructionSpec s;
    s.kind = Kind::Turan;
    s.n = n;
    s.r = r;
    return s;
}
ConstructionSpec ConstructionSpec::almost_regular(long long n, long long d) {
    ConstructionSpec s;
    s.kind = Kind::AlmostRegular;
    s.n = n;
    s.d = d;
    return s;
}
ConstructionSpec ConstructionSpec::multipartite(std::vector<int> parts) {
    ConstructionSpec s;
    s.kind = Kind::CompleteMultipartite;
    s.parts = std::move(parts);
    return s;
}
ConstructionSpec ConstructionSpec::l1(long long n, long long p, long long k) {
    ConstructionSpec s;
    s.kind = Kind::L1;
    s.n = n;
    s.p = p;
    s.k = k;
    return s;
}
ConstructionSpec ConstructionSpec::l2(long long n, long long p, long long k) {
    ConstructionSpec s;
    s.kind = Kind::L2;
    s.n = n;
    s.p = p;
    s.k = k;
    return s;
}
ConstructionSpec ConstructionSpec::h1(long long n, long long p, long long a, long long k) {
    ConstructionSpec s;
    s.kind = Kind::H1;
    s.n = n;
    s.p = p;
    s.a = a;
    s.k = k;
    return s;
}
ConstructionSpec ConstructionSpec::h2(long long n, long long p, long long a, long long k) {
    ConstructionSpec s;
    s.kind = Kind::H2;
    s.n = n;
    s.p = p;
    s.a = a;
    s.k = k;
    return s;
}
ConstructionSpec ConstructionSpec::h2rd(long long n, long long p, long long a, long long d, long long k) {
    ConstructionSpec s;
    s.kind = Kind::H2RD;
    s.n = n;
    s.p = p;
    s.a = a;
    s.d = d;
    s.k = k;
    return s;
}

std::vector<int> turan_parts(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("turan partition needs n >= 0, r >= 1");
    std::vector<int> parts(r);
    int q = n / r, rem = n % r;
    for (int i = 0; i < r; ++i) parts[i] = q + (i < rem ? 1 : 0);
    return parts;
}

Graph turan_graph(int n, int r) { return graphs::complete_multipartite(turan_parts(n, r)); }

Graph almost_regular(int n, int d) {
    if (n == 0) return Graph(0);
    if (d < 0 || d >= n) throw std::invalid_argument("almost regular: need 0 <= d < n");
    Graph g(n);
    int half = d / 2;
    for (int delta = 1; delta <= half; ++delta)
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + delta) % n);
    if (d % 2 == 1) {
        if (n % 2 == 0) {
            for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
        } else {
            // Near-perfect matching of half-turn chords; the walk hits every
            // vertex because gcd((n-1)/2, n) = 1. Last vertex ends at d-1.
            int step = (n - 1) / 2, cur = 0;
            for (int j = 0; j + 1 < n; j += 2) {
                int nxt = (cur + step) % n;
                g.add_edge(cur, nxt);
                cur = (nxt + step) % n;
            }
        }
    }
    return g;
}

Graph embed_in_class(const std::vector<int>& parts, int class_index, const Graph& payload) {
    if (class_index < 1 || class_index > static_cast<int>(parts.size()))
        throw std::invalid_argument("class index out of range");
    if (payload.order() > parts[class_index - 1])
        throw std::invalid_argument("payload too large for class");
    Graph g = graphs::complete_multipartite(parts);
    int offset = 0;
    for (int i = 0; i < class_index - 1; ++i) offset += parts[i];
    for (auto [u, v] : payload.edges()) g.add_edge(offset + u, offset + v);
    return g;
}

namespace {

Graph l_payload(const ConstructionSpec& spec) {
    int k = checked_int(spec.k, "k");
    if (k < 1) throw std::invalid_argument("payload needs k >= 1");
    if (spec.kind == ConstructionSpec::Kind::L1 || spec.kind == ConstructionSpec::Kind::H1)
        return almost_regular(2 * k - 1, k - 1);
    if (k % 2 == 0)
        return disjoint_union({almost_regular(k + 1, k - 1), graphs::complete(k - 1)});
    return disjoint_union({graphs::complete(k), graphs::complete(k)});
}

Graph build_l(const ConstructionSpec& spec, long long total, int payload_class) {
    if (spec.p < 1) throw std::invalid_argument("need p >= 1");
    auto parts = turan_parts(checked_int(total, "n"), checked_int(spec.p, "p"));
    return embed_in_class(parts, payload_class, l_payload(spec));
}

}  // namespace

Graph build_construction(const ConstructionSpec& spec, int payload_class) {
    using Kind = ConstructionSpec::Kind;
    switch (spec.kind) {
        case Kind::Turan:
            return turan_graph(checked_int(spec.n, "n"), checked_int(spec.r, "r"));
        case Kind::AlmostRegular:
            return almost_regular(checked_int(spec.n, "n"), checked_int(spec.d, "d"));
        case Kind::CompleteMultipartite:
            return graphs::complete_multipartite(spec.parts);
        case Kind::L1:
        case Kind::L2:
            return build_l(spec, spec.n, payload_class);
        case Kind::H1:
        case Kind::H2: {
            if (spec.a < 1) throw std::invalid_argument("need a >= 1");
            return join(graphs::complete(checked_int(spec.a - 1, "a")),
                        build_l(spec, spec.n - spec.a + 1, payload_class));
        }
        case Kind::H2RD: {
            if (spec.a < 1) throw std::invalid_argument("need a >= 1");
            return join(almost_regular(checked_int(spec.a - 1, "a"), checked_int(spec.d, "d")),
                        build_l(spec, spec.n - spec.a + 1, payload_class));
        }
    }
    throw std::logic_error("unreachable");
}

long long min_feasible_n(const ConstructionSpec& spec) {
    using Kind = ConstructionSpec::Kind;
    switch (spec.kind) {
        case Kind::Turan:
        case Kind::AlmostRegular:
        case Kind::CompleteMultipartite:
            return spec.n;
        case Kind::L1:
        case Kind::L2:
            return spec.p * (l_payload(spec).order() - 1) + 1;
        case Kind::H1:
        case Kind::H2:
        case Kind::H2RD:
            return spec.a + spec.p * (l_payload(spec).order() - 1);
    }
    throw std::logic_error("unreachable");
}

Graph edge_blowup(const Graph& f, int q) {
    if (q < 2) throw std::invalid_argument("edge blow-up needs clique size >= 2");
    auto es = f.edges();
    long long order = f.order() + static_cast<long long>(es.size()) * (q - 2);
    if (order > kMaxVertices) throw std::length_error("vertex capacity exceeded");
    Graph g(static_cast<int>(order));
    for (auto [u, v] : f.edges()) g.add_edge(u, v);
    int next = f.order();
    for (auto [u, v] : es) {
        std::vector<int> clique{u, v};
        for (int j = 0; j < q - 2; ++j) clique.push_back(next++);
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);
    }
    return g;
}

BlowupEmbedding embed_blowup_in_matching_join(const Tree& t, int p) {
    if (p < 3) throw std::invalid_argument("matching-join embedding needs p >= 3");
    BlowupEmbedding out;
    out.pattern = edge_blowup(t.graph, p + 1);
    int ell = out.pattern.order();

    // Host: matching of ell edges joined with a complete (p-1)-partite graph
    // with classes of size 2*ell each.
    std::vector<Graph> pairs(ell, graphs::complete(2));
    out.host = join(disjoint_union(pairs), graphs::complete_multipartite(std::vector<int>(p - 1, 2 * ell)));

    auto class_offset = [&](int j) { return 2 * ell + (j - 1) * 2 * ell; };  // classes 1..p-1

    int n = t.graph.order();
    out.map.assign(out.pattern.order(), -1);
    // Tree classes go to classes 1 and 2.
    for (size_t i = 0; i < t.class_a.size(); ++i) out.map[t.class_a[i]] = class_offset(1) + static_cast<int>(i);
    for (size_t i = 0; i < t.class_b.size(); ++i) out.map[t.class_b[i]] = class_offset(2) + static_cast<int>(i);
    // Per tree edge: one fresh vertex in each of classes 3..p-1 plus one
    // fresh matching pair.
    auto es = t.graph.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        int fresh = n + static_cast<int>(i) * (p - 1);
        int slot = 0;
        for (int j = 3; j <= p - 1; ++j) out.map[fresh + slot++] = class_offset(j) + static_cast<int>(i);
        out.map[fresh + slot++] = 2 * static_cast<int>(i);
        out.map[fresh + slot++] = 2 * static_cast<int>(i) + 1;
    }
    return out;
}

}  // namespace turan
