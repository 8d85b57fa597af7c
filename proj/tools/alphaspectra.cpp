// Command-line front end: families, invariants, spectra, quotients,
// censuses, extremal searches and the theorem/appendix verification
// harnesses. Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphaspectra/canonical.hpp"
#include "alphaspectra/enumerate.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/graph6.hpp"
#include "alphaspectra/invariants.hpp"
#include "alphaspectra/partition.hpp"
#include "alphaspectra/search.hpp"
#include "alphaspectra/spectral.hpp"

namespace as = alphaspectra;
using nlohmann::json;

namespace {

as::Graph parse_graph_arg(const std::string& text) {
    if (text.rfind("family:", 0) == 0)
        return as::build(as::parse_family_spec(text.substr(7)));
    return as::graph6_decode(text);
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        out.push_back(std::stod(text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty alpha grid");
    return out;
}

as::Partition parse_seed(const std::string& text) {
    as::Partition pi;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto bar = text.find('|', pos);
        std::string cls = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        std::vector<int> members;
        std::size_t p2 = 0;
        while (p2 < cls.size()) {
            auto comma = cls.find(',', p2);
            members.push_back(std::stoi(
                cls.substr(p2, comma == std::string::npos ? std::string::npos : comma - p2)));
            if (comma == std::string::npos) break;
            p2 = comma + 1;
        }
        if (!members.empty()) pi.push_back(std::move(members));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return pi;
}

std::string dot_format(const as::Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

enum class Format { human, json_out, csv_out };

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file " + path);
        os = &file;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-spectra: A_alpha-index extremal graph toolkit"};
    app.require_subcommand(1);

    bool want_json = false, want_csv = false;
    app.add_flag("--json", want_json, "machine-readable JSON (report-v1)");
    app.add_flag("--csv", want_csv, "CSV output");
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (default: ALPHA_SPECTRA_THREADS or hardware)");
    bool long_run = false;
    app.add_flag("--long-run", long_run, "allow the n=10 full census");
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file");

    // lambda
    auto* cmd_lambda = app.add_subcommand("lambda", "A_alpha-index of a graph");
    std::string lambda_graph;
    double lambda_alpha = 0.0;
    cmd_lambda->add_option("graph", lambda_graph, "graph6 string or family:<spec>")->required();
    cmd_lambda->add_option("--alpha", lambda_alpha, "alpha in [0,1)")->required();

    // family
    auto* cmd_family = app.add_subcommand("family", "construct a named family graph");
    std::string family_spec, family_emit = "graph6";
    cmd_family->add_option("spec", family_spec, "e.g. h3(2,0,2), f(6,5), sstar(9,3)")->required();
    cmd_family->add_option("--emit", family_emit, "graph6 or dot")
        ->check(CLI::IsMember({"graph6", "dot"}));

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "independence/matching/bipartite/tree");
    std::string inv_graph;
    cmd_inv->add_option("graph", inv_graph, "graph6 string or family:<spec>")->required();

    // quotient
    auto* cmd_quot = app.add_subcommand("quotient", "equitable partition and quotient matrix");
    std::string quot_graph, quot_seed;
    double quot_alpha = 0.0;
    cmd_quot->add_option("graph", quot_graph, "graph6 string or family:<spec>")->required();
    cmd_quot->add_option("--alpha", quot_alpha, "alpha in [0,1]")->required();
    cmd_quot->add_option("--seed", quot_seed, "seed partition, e.g. \"0,1|2,3,4\"");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "stream a census as graph6 lines");
    std::string enum_class;
    int enum_n = 0;
    cmd_enum->add_option("class", enum_class, "connected | trees | bipartite | i2")->required();
    cmd_enum->add_option("--n", enum_n, "order")->required();

    // extremal
    auto* cmd_ext = app.add_subcommand("extremal", "argmin/argmax of the index over a class");
    int ext_n = 0, ext_i = 0;
    double ext_alpha = 0.0;
    std::string ext_dir = "min", ext_class = "all";
    cmd_ext->add_option("--n", ext_n)->required();
    cmd_ext->add_option("--i", ext_i)->required();
    cmd_ext->add_option("--alpha", ext_alpha)->required();
    cmd_ext->add_option("--direction", ext_dir)->check(CLI::IsMember({"min", "max"}));
    cmd_ext->add_option("--class", ext_class)->check(CLI::IsMember({"all", "trees", "bipartite"}));

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "verify a theorem over a grid");
    std::string ver_id, ver_range, ver_grid;
    cmd_ver->add_option("theorem", ver_id, "thm1.1 thm3.1 thm3.2 thm5.1 thm1.5 thm1.5-tree thm1.6 lem1.1 lem2.1")
        ->required();
    cmd_ver->add_option("--n-range", ver_range, "e.g. 5..9")->required();
    cmd_ver->add_option("--alpha-grid", ver_grid,
                        "comma separated alphas (default: the theorem's own grid)");

    // compare
    auto* cmd_cmp = app.add_subcommand("compare", "lambda of two graphs across an alpha grid");
    std::string cmp_a, cmp_b, cmp_grid = "0,0.25,0.5,0.75";
    cmd_cmp->add_option("graph_a", cmp_a, "graph6 string or family:<spec>")->required();
    cmd_cmp->add_option("graph_b", cmp_b, "graph6 string or family:<spec>")->required();
    cmd_cmp->add_option("--alpha-grid", cmp_grid, "comma separated alphas");

    // appendix
    auto* cmd_app = app.add_subcommand("appendix", "check an appendix identity/inequality");
    std::string app_id;
    int app_samples = 200;
    cmd_app->add_option("identity", app_id, "h3-det-diff eq3.1 claim-c1 claim-c3 eq4.2 eq4.3 eq4.4")
        ->required();
    cmd_app->add_option("--samples", app_samples, "sample tuples (default 200)");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "index bounds for a graph");
    std::string bounds_graph;
    double bounds_alpha = 0.0;
    cmd_bounds->add_option("graph", bounds_graph, "graph6 string or family:<spec>")->required();
    cmd_bounds->add_option("--alpha", bounds_alpha, "alpha in [0,1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Format fmt = want_csv ? Format::csv_out : want_json ? Format::json_out : Format::human;
    as::SearchOptions opt;
    opt.threads = threads;
    opt.long_run = long_run;

    try {
        Output out;
        out.open(out_path);
        std::ostream& os = *out.os;

        if (*cmd_lambda) {
            as::Graph g = parse_graph_arg(lambda_graph);
            as::SpectralResult r = as::spectral_radius(g, lambda_alpha, false);
            if (fmt == Format::json_out) {
                json j{{"schema", "report-v1"}, {"kind", "lambda"},     {"n", g.order()},
                       {"alpha", lambda_alpha}, {"lambda", r.lambda},   {"residual", r.residual},
                       {"perron", r.perron}};
                os << j.dump(2) << "\n";
            } else if (fmt == Format::csv_out) {
                os << "n,alpha,lambda,residual\n";
                char buf[96];
                std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.3g\n", g.order(), lambda_alpha,
                              r.lambda, r.residual);
                os << buf;
            } else {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "lambda_%g = %.12f   (perron residual %.2e)\n",
                              lambda_alpha, r.lambda, r.residual);
                os << buf;
            }
            return 0;
        }

        if (*cmd_family) {
            as::Graph g = as::build(as::parse_family_spec(family_spec));
            if (family_emit == "dot")
                os << dot_format(g);
            else
                os << as::graph6_encode(g) << "\n";
            return 0;
        }

        if (*cmd_inv) {
            as::Graph g = parse_graph_arg(inv_graph);
            int ind = as::independence_number(g);
            bool bip = as::is_bipartite(g), tree = as::is_tree(g);
            int mu = -1;
            if (g.order() <= as::kMaxMatchingVertices) mu = as::matching_number(g);
            if (fmt == Format::json_out) {
                json j{{"schema", "report-v1"},      {"kind", "invariants"}, {"n", g.order()},
                       {"edges", g.size()},          {"independence", ind},  {"bipartite", bip},
                       {"tree", tree}};
                if (mu >= 0) j["matching"] = mu; else j["matching"] = nullptr;
                os << j.dump(2) << "\n";
            } else {
                os << "n = " << g.order() << "  |E| = " << g.size() << "\n";
                os << "independence number i = " << ind << "\n";
                if (mu >= 0)
                    os << "matching number  mu = " << mu << "\n";
                else
                    os << "matching number  mu = (order above exhaustive range)\n";
                os << "bipartite = " << (bip ? "yes" : "no") << "  tree = " << (tree ? "yes" : "no")
                   << "\n";
            }
            return 0;
        }

        if (*cmd_quot) {
            as::Graph g = parse_graph_arg(quot_graph);
            as::Partition seed =
                quot_seed.empty() ? as::trivial_partition(g.order()) : parse_seed(quot_seed);
            as::Partition pi = as::coarsest_equitable(g, seed);
            as::QuotientMatrix q = as::quotient_matrix(g, quot_alpha, pi);
            double lam_q = as::largest_eigenvalue_of_quotient(q);
            double lam_full = quot_alpha < 1.0 ? as::alpha_index(g, quot_alpha) : lam_q;
            if (fmt == Format::json_out) {
                json jq = json::array();
                for (int r = 0; r < q.t; ++r) {
                    json row = json::array();
                    for (int c = 0; c < q.t; ++c) row.push_back(q.at(r, c));
                    jq.push_back(row);
                }
                json j{{"schema", "report-v1"},
                       {"kind", "quotient"},
                       {"n", g.order()},
                       {"alpha", quot_alpha},
                       {"partition", pi},
                       {"equitable", q.equitable},
                       {"quotient", jq},
                       {"lambda_quotient", lam_q},
                       {"lambda_full", lam_full}};
                os << j.dump(2) << "\n";
            } else {
                os << "partition (" << pi.size() << " classes):";
                for (const auto& cls : pi) {
                    os << " {";
                    for (std::size_t k = 0; k < cls.size(); ++k) os << (k ? "," : "") << cls[k];
                    os << "}";
                }
                os << "\nequitable: " << (q.equitable ? "yes" : "no") << "\nquotient matrix:\n";
                for (int r = 0; r < q.t; ++r) {
                    for (int c = 0; c < q.t; ++c) {
                        char buf[32];
                        std::snprintf(buf, sizeof(buf), " %10.6f", q.at(r, c));
                        os << buf;
                    }
                    os << "\n";
                }
                char buf[96];
                std::snprintf(buf, sizeof(buf), "lambda(quotient) = %.12f  lambda(full) = %.12f\n",
                              lam_q, lam_full);
                os << buf;
            }
            return 0;
        }

        if (*cmd_enum) {
            as::GraphStream stream = [&]() -> as::GraphStream {
                if (enum_class == "connected") return as::connected_graphs(enum_n, long_run);
                if (enum_class == "trees") return as::trees(enum_n);
                if (enum_class == "bipartite") return as::connected_bipartite(enum_n);
                if (enum_class == "i2") return as::connected_independence_two(enum_n);
                throw std::invalid_argument("class must be connected, trees, bipartite or i2");
            }();
            long count = 0;
            while (auto g = stream.next()) {
                os << as::graph6_encode(*g) << "\n";
                ++count;
            }
            std::cerr << count << " graphs\n";
            return 0;
        }

        if (*cmd_ext) {
            as::SearchReport r = as::extremal(ext_n, ext_i, ext_alpha,
                                              as::direction_from_string(ext_dir),
                                              as::graph_class_from_string(ext_class), opt);
            if (fmt == Format::json_out)
                os << as::to_json(r) << "\n";
            else if (fmt == Format::csv_out)
                os << as::to_csv(r);
            else {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "%s over %s n=%d i=%d alpha=%g: lambda = %.12f (searched %ld, gap %.3g)\n",
                              ext_dir.c_str(), ext_class.c_str(), ext_n, ext_i, ext_alpha, r.lambda,
                              r.searched, r.runner_up_gap);
                os << buf << "winners:";
                for (const auto& w : r.winners) os << " " << w;
                os << "\n";
                std::snprintf(buf, sizeof(buf), "elapsed %.2f s\n", r.elapsed_seconds);
                os << buf;
            }
            return 0;
        }

        auto emit_verdict = [&](const as::TheoremVerdict& v) {
            std::ostream& vs = *out.os;
            if (fmt == Format::json_out)
                vs << as::to_json(v) << "\n";
            else if (fmt == Format::csv_out)
                vs << as::to_csv(v);
            else {
                vs << v.theorem_id << " [" << v.parameter_grid << "] -> " << to_string(v.status)
                   << "\n";
                for (const auto& row : v.rows)
                    vs << "  " << (row.ok ? "ok  " : "FAIL") << " " << row.point << "  expected "
                       << row.expected << "  got " << row.got << "\n";
                if (!v.witnesses.empty()) {
                    vs << "witnesses:";
                    for (const auto& w : v.witnesses) vs << " " << w;
                    vs << "\n";
                }
            }
            return v.status == as::VerdictStatus::pass ? 0 : 1;
        };

        if (*cmd_ver) {
            std::vector<double> grid =
                ver_grid.empty() ? as::default_alpha_grid(ver_id) : parse_grid(ver_grid);
            return emit_verdict(as::verify_theorem(ver_id, parse_range(ver_range), grid, opt));
        }

        if (*cmd_app) return emit_verdict(as::appendix_check(app_id, app_samples));

        if (*cmd_cmp) {
            auto rows = as::compare_pair(parse_graph_arg(cmp_a), parse_graph_arg(cmp_b),
                                         parse_grid(cmp_grid));
            if (fmt == Format::json_out)
                os << as::to_json(rows) << "\n";
            else if (fmt == Format::csv_out)
                os << as::to_csv(rows);
            else
                for (const auto& row : rows) {
                    char buf[128];
                    std::snprintf(buf, sizeof(buf), "alpha=%-6g  %.12f  %c  %.12f\n", row.alpha,
                                  row.lambda_a, row.sign < 0 ? '<' : row.sign > 0 ? '>' : '=',
                                  row.lambda_b);
                    os << buf;
                }
            return 0;
        }

        if (*cmd_bounds) {
            as::Graph g = parse_graph_arg(bounds_graph);
            as::IndexBounds b = as::index_bounds(g, bounds_alpha);
            double lam = as::alpha_index(g, bounds_alpha);
            if (fmt == Format::json_out) {
                json j{{"schema", "report-v1"}, {"kind", "bounds"},       {"n", g.order()},
                       {"alpha", bounds_alpha}, {"lower", b.lower},       {"upper", b.upper},
                       {"lower_star", b.lower_star}, {"lambda", lam}};
                os << j.dump(2) << "\n";
            } else {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "2|E|/n = %.9f <= lambda = %.12f <= %.9f ; star bound %.9f\n",
                              b.lower, lam, b.upper, b.lower_star);
                os << buf;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
