#include "alphaspectra/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace alphaspectra {

// graph6 packs the upper triangle column by column (x_{0,1}, x_{0,2}, x_{1,2},
// x_{0,3}, ...), six bits per printable byte, each byte offset by 63.

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    std::size_t pos = 0;
    int n;
    if (text[0] == '~') {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int c = static_cast<unsigned char>(text[k]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad order byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(text[0]) - 63;
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6: unsupported order " + std::to_string(n));

    long need = static_cast<long>(n) * (n - 1) / 2;
    long have = static_cast<long>(text.size() - pos) * 6;
    if (have < need || have >= need + 6)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(text[pos + bit / 6]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad body byte");
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (long b = need; b < have; ++b) {
        int c = static_cast<unsigned char>(text[pos + b / 6]) - 63;
        if ((c >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph::from_edges(n, edges);
}

} // namespace alphaspectra
