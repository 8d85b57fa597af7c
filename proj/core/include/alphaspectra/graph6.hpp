#ifndef ALPHASPECTRA_GRAPH6_HPP
#define ALPHASPECTRA_GRAPH6_HPP

#include <string>
#include <string_view>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

// Header-less graph6 text format (one graph per line in files).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

} // namespace alphaspectra

#endif
