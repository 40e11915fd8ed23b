#include "turan/graph6.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {
constexpr int kBias = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out.push_back(static_cast<char>(v + kBias));
    }
}
}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    } else {
        throw std::length_error("graph6: order too large");
    }
    // Upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c;
    };

    long long n;
    int c0 = next_byte();
    if (c0 < 126) {
        n = c0 - kBias;
    } else {
        int b1 = next_byte();
        if (b1 == 126) throw std::invalid_argument("graph6: order too large");
        int b2 = next_byte();
        int b3 = next_byte();
        n = (static_cast<long long>(b1 - kBias) << 12) | ((b2 - kBias) << 6) | (b3 - kBias);
    }
    if (n > kMaxVertices) throw std::length_error("graph6: order exceeds vertex capacity");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != nbytes)
        throw std::invalid_argument(s.size() - pos < static_cast<size_t>(nbytes)
                                        ? "graph6: truncated bit vector"
                                        : "graph6: trailing bytes");

    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = static_cast<unsigned char>(s[pos + bit / 6]) - kBias;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero.
    for (; bit < nbytes * 6; ++bit) {
        int byte = static_cast<unsigned char>(s[pos + bit / 6]) - kBias;
        if ((byte >> (5 - bit % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

std::vector<Graph> graph6_read_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

std::vector<Graph> graph6_read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph6_read_lines(ss.str());
}

}  // namespace turan
