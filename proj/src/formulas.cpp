#include "turan/formulas.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace turan {

namespace {
long long binom2(long long x) { return x * (x - 1) / 2; }
long long ceil_div(long long x, long long y) { return (x + y - 1) / y; }
}  // namespace

long long g1(long long k) {
    if (k < 1) throw std::invalid_argument("g1 needs k >= 1");
    return k % 2 == 0 ? k * k - 3 * k / 2 : k * k - (3 * k - 1) / 2;
}

long long g2(long long k) {
    if (k < 1) throw std::invalid_argument("g2 needs k >= 1");
    return k % 2 == 0 ? k * k - 3 * k / 2 : k * k - k;
}

long long turan_edge_count(long long n, long long r) {
    if (n < 0 || r < 1) throw std::invalid_argument("turan edge count needs n >= 0, r >= 1");
    long long q = n / r, rem = n % r;
    return binom2(n) - rem * binom2(q + 1) - (r - rem) * binom2(q);
}

long long g_base(long long n, long long p, long long a) {
    if (n < a || a < 1 || p < 1) throw std::invalid_argument("g needs n >= a >= 1, p >= 1");
    return turan_edge_count(n - a + 1, p) + (a - 1) * (n - a + 1) + binom2(a - 1);
}

long long g_reg(long long n, long long p, long long a, long long d) {
    if (n < a || a < 1 || p < 1) throw std::invalid_argument("g needs n >= a >= 1, p >= 1");
    if (a - 1 > 0 && (d < 0 || d >= a - 1)) throw std::invalid_argument("g: infeasible degree d");
    return turan_edge_count(n - a + 1, p) + (a - 1) * (n - a + 1) + (a - 1) * d / 2;
}

long long chvatal_hanson(long long nu, long long delta) {
    if (nu < 1 || delta < 1) throw std::invalid_argument("chvatal-hanson needs nu, delta >= 1");
    return nu * delta + (delta / 2) * (nu / ceil_div(delta, 2));
}

long long component_edge_bound(long long x, long long k) {
    if (x < 1 || k < 2) throw std::invalid_argument("component bound needs x >= 1, k >= 2");
    return x <= k - 1 ? binom2(x) : (k - 1) * x / 2;
}

const char* to_string(TheoremCaseTag tag) {
    switch (tag) {
        case TheoremCaseTag::K_EVEN: return "K_EVEN";
        case TheoremCaseTag::K_ODD_B0_EMPTY: return "K_ODD_B0_EMPTY";
        case TheoremCaseTag::K_ODD_B_SMALL: return "K_ODD_B_SMALL";
        case TheoremCaseTag::K_ODD_B_LARGE: return "K_ODD_B_LARGE";
        case TheoremCaseTag::K_ODD_B_BOUNDARY: return "K_ODD_B_BOUNDARY";
    }
    return "?";
}

TheoremCase dispatch(const TreeParams& params, long long n, long long p, bool require_feasible) {
    if (p <= 2) throw std::invalid_argument("dispatch needs p >= 3");
    long long a = params.a, k = params.k;
    if (k <= 1)
        throw std::invalid_argument(
            "dispatch needs min degree >= 2 on class A; the k = 1 regime is outside this formula");

    auto check_feasible = [&](const ConstructionSpec& spec) {
        long long min_n = min_feasible_n(spec);
        if (n < min_n)
            throw std::invalid_argument("n too small for " + spec.to_text() +
                                        " (minimal feasible n = " + std::to_string(min_n) + ")");
    };

    TheoremCase out;
    ConstructionSpec spec_h1 = ConstructionSpec::h1(n, p, a, k);
    ConstructionSpec spec_h2 = ConstructionSpec::h2(n, p, a, k);

    if (k % 2 == 0) {
        out.tag = TheoremCaseTag::K_EVEN;
        out.value = g_base(n, p, a) + g1(k);
        out.extremal = {spec_h1, spec_h2};
    } else if (!params.b.has_value()) {
        out.tag = TheoremCaseTag::K_ODD_B0_EMPTY;
        out.value = g_base(n, p, a) + g2(k);
        out.extremal = {spec_h2};
    } else {
        long long b = *params.b;
        // A single vertex in A cannot give a B-vertex two neighbors in A0.
        if (a == 1) throw std::logic_error("a = 1 forces an empty B0");
        long long threshold = a - 1 - ceil_div(k - 1, a - 1);
        long long v1 = g_base(n, p, a) + g1(k);
        if (b == 0 || b < threshold) {
            out.tag = TheoremCaseTag::K_ODD_B_SMALL;
            out.value = v1;
            out.extremal = {spec_h1};
        } else {
            ConstructionSpec spec_h2rd = ConstructionSpec::h2rd(n, p, a, b - 1, k);
            long long v2 = g_reg(n, p, a, b - 1) + g2(k);
            if (b == threshold) {
                // The two candidate formulas tie exactly iff (a-1) | (k-1);
                // otherwise the K_{a-1} side is strictly larger and wins.
                assert(v1 >= v2);
                if (v1 == v2) {
                    out.tag = TheoremCaseTag::K_ODD_B_BOUNDARY;
                    out.value = v1;
                    out.extremal = {spec_h1, spec_h2rd};
                } else {
                    out.tag = TheoremCaseTag::K_ODD_B_SMALL;
                    out.value = v1;
                    out.extremal = {spec_h1};
                }
            } else {
                out.tag = TheoremCaseTag::K_ODD_B_LARGE;
                out.value = v2;
                out.extremal = {spec_h2rd};
            }
        }
    }
    if (require_feasible)
        for (const auto& spec : out.extremal) check_feasible(spec);
    return out;
}

}  // namespace turan
