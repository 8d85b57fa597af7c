#ifndef ALPHASPECTRA_INVARIANTS_HPP
#define ALPHASPECTRA_INVARIANTS_HPP

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

// Exact maximum matching is done by exhaustive branching; keep the order
// small enough that the subset cache stays tiny.
inline constexpr int kMaxMatchingVertices = 20;

int independence_number(const Graph& g);
int matching_number(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

} // namespace alphaspectra

#endif
