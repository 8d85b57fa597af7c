#ifndef ALPHASPECTRA_FAMILIES_HPP
#define ALPHASPECTRA_FAMILIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

// Named constructors for every graph family the theorems talk about. Each
// checks its parameter constraints and asserts the expected independence
// number of the result before returning it.
//
// Vertex numbering (so eigenvector-entry assertions are testable):
//   path/cycle     0-1-2-...-(n-1)
//   star           centre 0
//   t_shape(a,b,c) centre 0, then the three legs in order a, b, c
//   double_snake   u=0, v=1, pendants 2,3 on u and 4,5 on v, chain 6..n-1
//   g1(s,t)        v1=0, v2=1, then s pendants of v1, t pendants of v2
//   g2(s,t)        v1=0, v2=1, v3=2 (path v1-v3-v2), pendants as g1
//   h1(s,t,k)      v1=0, v2=1, v3=2 (path), pendants s,t,k in that order
//   h2(s,t,k)      v4=3 subdivides v1v2: path v1-v4-v2-v3
//   h3(s,t,k)      v5=4 subdivides v2v3: path v1-v4-v2-v5-v3
//   h4(s,t,k)      h2 with v2v3 replaced by v3v4: v4 adjacent to v1,v2,v3
//   f(s,t)         K_s on 0..s-1 (u=0), K_t on s..s+t-1 (v=s), bridge uv
//   s_star(n,k)    centre 0, star leaves 1..n-k, pendant tips n-k+1..n-1
//                  attached to leaves 1..k-1
//   k_split(n,i)   independent set 0..i-1, clique i..n-1

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int n); // K_{1,n-1}
Graph t_shape(int a, int b, int c);
Graph double_snake(int n); // W_n, n >= 6

Graph g_family(int variant, int s, int t);        // variant 1 or 2
Graph h_family(int variant, int s, int t, int k); // variant 1..4
Graph f_family(int s, int t);                     // (K_{s,t} - e)^c
Graph s_star(int n, int k);                       // S*_{n,n-k}
Graph k_split(int n, int i);                      // K_i^c v K_{n-i}

enum class FamilyKind {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    t_shape,
    double_snake,
    g1,
    g2,
    h1,
    h2,
    h3,
    h4,
    f,
    s_star,
    k_split,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

// Text form "kind(p1,p2,...)" with kind one of: path, cycle, complete, kbip,
// star, tshape, doublesnake, g1, g2, h1, h2, h3, h4, f, sstar, ksplit.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph build(const FamilySpec& spec);

} // namespace alphaspectra

#endif
