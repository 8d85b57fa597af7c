#ifndef ALPHASPECTRA_SEARCH_HPP
#define ALPHASPECTRA_SEARCH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

enum class Direction { min, max };
enum class GraphClass { all, trees, bipartite };

std::string to_string(Direction d);
std::string to_string(GraphClass c);
Direction direction_from_string(std::string_view s);
GraphClass graph_class_from_string(std::string_view s);

struct SearchOptions {
    int threads = 0;            // 0: ALPHA_SPECTRA_THREADS env, then hardware count
    double tie_tolerance = 1e-9;
    bool long_run = false;      // unlocks the n = 10 full census
};

struct SearchReport {
    int n = 0;
    int i = 0;
    double alpha = 0.0;
    Direction direction = Direction::min;
    GraphClass graph_class = GraphClass::all;
    std::vector<std::string> winners; // canonical graph6, canonical-key ascending
    double lambda = 0.0;
    double runner_up_gap = 0.0; // distance to the best non-winner, 0 if none
    long searched = 0;          // class members evaluated
    double elapsed_seconds = 0.0;
};

// argmin/argmax of the A_alpha-index over the (n,i) slice of a graph class.
// All graphs within tie_tolerance of the optimum are reported as winners.
// For class all / i = 2 / n >= 10 the triangle-free-complement census is used.
SearchReport extremal(int n, int i, double alpha, Direction direction, GraphClass graph_class,
                      const SearchOptions& opt = {});

enum class VerdictStatus { pass, fail, tie_flagged };

std::string to_string(VerdictStatus s);

struct GridRow {
    std::string point;    // e.g. "n=7 i=5 alpha=0.25"
    std::string expected; // family spec or predicate description
    std::string got;      // winning graph(s), graph6
    bool ok = false;
};

struct TheoremVerdict {
    std::string theorem_id;
    std::string parameter_grid;
    VerdictStatus status = VerdictStatus::pass;
    std::vector<std::string> witnesses; // graph6 of offending graphs
    std::vector<GridRow> rows;
};

// Supported ids: thm1.1, thm3.1, thm3.2, thm5.1, thm1.5, thm1.5-tree,
// thm1.6, lem1.1, lem2.1. Grids outside a theorem's hypotheses are rejected.
TheoremVerdict verify_theorem(const std::string& theorem_id, std::pair<int, int> n_range,
                              const std::vector<double>& alpha_grid, const SearchOptions& opt = {});

// Supported ids: h3-det-diff, eq3.1, claim-c1, claim-c3, eq4.2, eq4.3, eq4.4.
// Identity ids compare closed forms against quotient determinants at sampled
// in-hypothesis tuples (relative tolerance 1e-6); inequality ids assert signs.
TheoremVerdict appendix_check(const std::string& identity_id, int samples);

std::vector<std::string> supported_theorems();
std::vector<std::string> supported_identities();

// Default grid per theorem: the stated interval's endpoints and midpoints
// plus the special values (1/2, 11/20, 3/4) where hypotheses change.
std::vector<double> default_alpha_grid(const std::string& theorem_id);

struct ComparisonRow {
    double alpha = 0.0;
    double lambda_a = 0.0;
    double lambda_b = 0.0;
    int sign = 0; // +1 if lambda_a > lambda_b beyond 1e-9, -1 if below, else 0
};

std::vector<ComparisonRow> compare_pair(const Graph& a, const Graph& b,
                                        const std::vector<double>& alpha_grid);

// report-v1 wire formats
std::string to_json(const SearchReport& r);
std::string to_json(const TheoremVerdict& v);
std::string to_json(const std::vector<ComparisonRow>& rows);
std::string to_csv(const SearchReport& r);
std::string to_csv(const TheoremVerdict& v);
std::string to_csv(const std::vector<ComparisonRow>& rows);

int resolve_threads(int request);

} // namespace alphaspectra

#endif
