#ifndef ALPHASPECTRA_CANONICAL_HPP
#define ALPHASPECTRA_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

// Exact canonical labeling is supported up to this order; the search cost is
// tame here and the desk-scale targets stay well below it.
inline constexpr int kMaxCanonicalVertices = 16;

// Total-order key; two graphs of equal order compare equal iff isomorphic.
// bits holds the lexicographically smallest upper-triangle adjacency string
// over all labelings compatible with equitable refinement, MSB first.
struct CanonicalKey {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 2> bits{};

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalLabeling {
    CanonicalKey key;
    std::vector<int> order; // canonical position -> original vertex
};

CanonicalKey canonical_key(const Graph& g);
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);

std::string to_hex(const CanonicalKey& key);

} // namespace alphaspectra

#endif
