#include "alphaspectra/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "alphaspectra/invariants.hpp"

namespace alphaspectra {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

Graph checked(Graph g, int expected_independence) {
    if (independence_number(g) != expected_independence)
        throw std::logic_error("family constructor produced wrong independence number");
    return g;
}

using EdgeList = std::vector<std::pair<int, int>>;

void attach_pendants(EdgeList& edges, int at, int count, int& next) {
    for (int p = 0; p < count; ++p) edges.emplace_back(at, next++);
}

} // namespace

Graph path_graph(int n) {
    if (n < 1) bad("path: n >= 1 required");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) bad("cycle: n >= 3 required");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) bad("complete: n >= 1 required");
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) bad("complete bipartite: both parts must be nonempty");
    EdgeList edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph star_graph(int n) {
    if (n < 2) bad("star: n >= 2 required");
    return complete_bipartite_graph(1, n - 1);
}

Graph t_shape(int a, int b, int c) {
    if (!(1 <= a && a <= b && b <= c)) bad("t_shape: 1 <= a <= b <= c required");
    int n = a + b + c + 1;
    EdgeList edges;
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(n, edges);
}

Graph double_snake(int n) {
    if (n < 6) bad("double snake: n >= 6 required");
    EdgeList edges{{0, 2}, {0, 3}, {1, 4}, {1, 5}};
    int prev = 0;
    for (int w = 6; w < n; ++w) {
        edges.emplace_back(prev, w);
        prev = w;
    }
    edges.emplace_back(prev, 1);
    return Graph::from_edges(n, edges);
}

Graph g_family(int variant, int s, int t) {
    if (variant == 1) {
        if (std::min(s, t) < 1) bad("g1: min{s,t} >= 1 required");
        EdgeList edges{{0, 1}};
        int next = 2;
        attach_pendants(edges, 0, s, next);
        attach_pendants(edges, 1, t, next);
        return checked(Graph::from_edges(s + t + 2, edges), s + t);
    }
    if (variant == 2) {
        if (std::max(s, t) < 1) bad("g2: max{s,t} >= 1 required");
        EdgeList edges{{0, 2}, {2, 1}};
        int next = 3;
        attach_pendants(edges, 0, s, next);
        attach_pendants(edges, 1, t, next);
        return checked(Graph::from_edges(s + t + 3, edges), s + t + 1);
    }
    bad("g_family: variant must be 1 or 2");
}

Graph h_family(int variant, int s, int t, int k) {
    if (s < 0 || t < 0 || k < 0) bad("h_family: parameters must be nonnegative");
    EdgeList edges;
    int next = 0;
    switch (variant) {
        case 1:
            if (std::min({s, t, k}) < 1) bad("h1: min{s,t,k} >= 1 required");
            edges = {{0, 1}, {1, 2}};
            next = 3;
            break;
        case 2:
            if (std::max(s, t) < 1 || k < 1) bad("h2: max{s,t} >= 1 and k >= 1 required");
            edges = {{0, 3}, {3, 1}, {1, 2}};
            next = 4;
            break;
        case 3:
            if (std::max({s, t, k}) < 1) bad("h3: max{s,t,k} >= 1 required");
            edges = {{0, 3}, {3, 1}, {1, 4}, {4, 2}};
            next = 5;
            break;
        case 4:
            if ((s > 0) + (t > 0) + (k > 0) < 2) bad("h4: at least two of s,t,k must be positive");
            edges = {{0, 3}, {3, 1}, {3, 2}};
            next = 4;
            break;
        default:
            bad("h_family: variant must be in 1..4");
    }
    int n = next + s + t + k;
    attach_pendants(edges, 0, s, next);
    attach_pendants(edges, 1, t, next);
    attach_pendants(edges, 2, k, next);
    return checked(Graph::from_edges(n, edges), n - 3);
}

Graph f_family(int s, int t) {
    if (s < 1 || t < 1 || s + t < 3) bad("f: s,t >= 1 and s+t >= 3 required");
    EdgeList edges;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    for (int i = s; i < s + t; ++i)
        for (int j = i + 1; j < s + t; ++j) edges.emplace_back(i, j);
    edges.emplace_back(0, s);
    return checked(Graph::from_edges(s + t, edges), 2);
}

Graph s_star(int n, int k) {
    if (k < 1) bad("s_star: k >= 1 required");
    if (n < 2 * k) bad("s_star: n >= 2k required");
    EdgeList edges;
    for (int leaf = 1; leaf <= n - k; ++leaf) edges.emplace_back(0, leaf);
    int next = n - k + 1;
    for (int leaf = 1; leaf <= k - 1; ++leaf) edges.emplace_back(leaf, next++);
    return checked(Graph::from_edges(n, edges), n - k);
}

Graph k_split(int n, int i) {
    if (i < 1 || i > n - 1) bad("k_split: 1 <= i <= n-1 required");
    EdgeList edges;
    for (int a = i; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    for (int a = 0; a < i; ++a)
        for (int b = i; b < n; ++b) edges.emplace_back(a, b);
    return checked(Graph::from_edges(n, edges), std::max(i, 1));
}

namespace {

const std::map<std::string, std::pair<FamilyKind, int>, std::less<>> kGrammar = {
    {"path", {FamilyKind::path, 1}},
    {"cycle", {FamilyKind::cycle, 1}},
    {"complete", {FamilyKind::complete, 1}},
    {"kbip", {FamilyKind::complete_bipartite, 2}},
    {"star", {FamilyKind::star, 1}},
    {"tshape", {FamilyKind::t_shape, 3}},
    {"doublesnake", {FamilyKind::double_snake, 1}},
    {"g1", {FamilyKind::g1, 2}},
    {"g2", {FamilyKind::g2, 2}},
    {"h1", {FamilyKind::h1, 3}},
    {"h2", {FamilyKind::h2, 3}},
    {"h3", {FamilyKind::h3, 3}},
    {"h4", {FamilyKind::h4, 3}},
    {"f", {FamilyKind::f, 2}},
    {"sstar", {FamilyKind::s_star, 2}},
    {"ksplit", {FamilyKind::k_split, 2}},
};

std::string kind_name(FamilyKind kind) {
    for (const auto& [name, entry] : kGrammar)
        if (entry.first == kind) return name;
    return "?";
}

} // namespace

FamilySpec parse_family_spec(std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        bad("family spec must look like kind(p1,p2,...): " + std::string(text));
    std::string name(text.substr(0, open));
    auto it = kGrammar.find(name);
    if (it == kGrammar.end()) bad("unknown family kind: " + name);

    FamilySpec spec{it->second.first, {}};
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        auto comma = body.find(',', pos);
        std::string tok(body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos));
        try {
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            spec.params.push_back(value);
        } catch (const std::exception&) {
            bad("bad family parameter '" + tok + "' in " + std::string(text));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(spec.params.size()) != it->second.second)
        bad(name + " expects " + std::to_string(it->second.second) + " parameter(s)");
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string out = kind_name(spec.kind) + "(";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec.params[i]);
    }
    return out + ")";
}

Graph build(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::path: return path_graph(p[0]);
        case FamilyKind::cycle: return cycle_graph(p[0]);
        case FamilyKind::complete: return complete_graph(p[0]);
        case FamilyKind::complete_bipartite: return complete_bipartite_graph(p[0], p[1]);
        case FamilyKind::star: return star_graph(p[0]);
        case FamilyKind::t_shape: return t_shape(p[0], p[1], p[2]);
        case FamilyKind::double_snake: return double_snake(p[0]);
        case FamilyKind::g1: return g_family(1, p[0], p[1]);
        case FamilyKind::g2: return g_family(2, p[0], p[1]);
        case FamilyKind::h1: return h_family(1, p[0], p[1], p[2]);
        case FamilyKind::h2: return h_family(2, p[0], p[1], p[2]);
        case FamilyKind::h3: return h_family(3, p[0], p[1], p[2]);
        case FamilyKind::h4: return h_family(4, p[0], p[1], p[2]);
        case FamilyKind::f: return f_family(p[0], p[1]);
        case FamilyKind::s_star: return s_star(p[0], p[1]);
        case FamilyKind::k_split: return k_split(p[0], p[1]);
    }
    bad("unhandled family kind");
}

} // namespace alphaspectra
