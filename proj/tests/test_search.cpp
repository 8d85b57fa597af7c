#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "alphaspectra/canonical.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/graph6.hpp"
#include "alphaspectra/invariants.hpp"
#include "alphaspectra/search.hpp"

using namespace alphaspectra;

namespace {

std::string canon6(const Graph& g) { return graph6_encode(canonical_form(g)); }

} // namespace

TEST_CASE("extremal winners from the theorems") {
    SearchReport r = extremal(6, 3, 0.0, Direction::min, GraphClass::all);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == canon6(path_graph(6)));
    CHECK(r.runner_up_gap > 1e-9);

    r = extremal(7, 5, 0.2, Direction::min, GraphClass::all);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == canon6(g_family(2, 2, 2)));

    r = extremal(6, 3, 0.4, Direction::max, GraphClass::all);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == canon6(k_split(6, 3)));

    r = extremal(7, 3, 0.25, Direction::min, GraphClass::all);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == canon6(cycle_graph(7)));
}

TEST_CASE("extremal error paths") {
    CHECK_THROWS_AS(extremal(5, 5, 0.2, Direction::min, GraphClass::all), std::invalid_argument);
    CHECK_THROWS_AS(extremal(6, 2, 0.2, Direction::min, GraphClass::trees), std::invalid_argument);
    CHECK_THROWS_AS(extremal(6, 3, 1.0, Direction::min, GraphClass::all), std::invalid_argument);
}

TEST_CASE("winners carry the requested independence number") {
    for (int i : {2, 3, 4, 5}) {
        SearchReport r = extremal(6, i, 0.3, Direction::min, GraphClass::all);
        for (const auto& w : r.winners) CHECK(independence_number(graph6_decode(w)) == i);
    }
}

TEST_CASE("determinism and thread-count independence") {
    SearchOptions serial;
    serial.threads = 1;
    SearchOptions parallel;
    parallel.threads = 3;
    for (double a : {0.0, 0.45}) {
        SearchReport r1 = extremal(7, 4, a, Direction::min, GraphClass::all, serial);
        SearchReport r2 = extremal(7, 4, a, Direction::min, GraphClass::all, parallel);
        CHECK(r1.winners == r2.winners);
        CHECK(r1.lambda == r2.lambda);
        CHECK(r1.runner_up_gap == r2.runner_up_gap);
    }
}

TEST_CASE("verify thm1.1 on a small grid") {
    TheoremVerdict v = verify_theorem("thm1.1", {6, 7}, {0.0, 0.5});
    CHECK(v.status == VerdictStatus::pass);
    CHECK(v.witnesses.empty());
}

TEST_CASE("verify thm3.1 on a small grid") {
    CHECK(verify_theorem("thm3.1", {5, 8}, {0.0, 0.25, 0.75}).status == VerdictStatus::pass);
}

TEST_CASE("verify thm3.2 structured space at n=10") {
    TheoremVerdict v = verify_theorem("thm3.2", {10, 10}, {0.5, 0.8});
    CHECK(v.status == VerdictStatus::pass);
    // winner of part (ii) at n = 10 = 3*3+1 is H_3(2,1,2)
    std::string expect = canon6(h_family(3, 2, 1, 2));
    for (const auto& row : v.rows) CHECK(row.got == expect);
}

TEST_CASE("verify thm1.5 and thm1.6 small") {
    CHECK(verify_theorem("thm1.5", {5, 7}, {0.5, 0.7}).status == VerdictStatus::pass);
    CHECK(verify_theorem("thm1.5-tree", {4, 8}, {0.0, 0.6}).status == VerdictStatus::pass);
    CHECK(verify_theorem("thm1.6", {4, 6}, {0.0, 0.6}).status == VerdictStatus::pass);
}

TEST_CASE("verify lemma harnesses") {
    CHECK(verify_theorem("lem1.1", {6, 8}, {0.0, 0.5, 0.9}).status == VerdictStatus::pass);
    CHECK(verify_theorem("lem2.1", {4, 7}, {0.0, 0.3, 0.8}).status == VerdictStatus::pass);
}

TEST_CASE("grids outside the hypotheses are rejected") {
    CHECK_THROWS_AS(verify_theorem("thm5.1", {11, 11}, {0.8}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm5.1", {9, 9}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm1.5", {6, 7}, {0.3}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm3.2", {8, 8}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm1.1", {6, 7}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("nope", {5, 6}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("thm1.1", {7, 6}, {0.5}), std::invalid_argument);
}

TEST_CASE("appendix identities pass on sampled tuples") {
    for (const auto& id : supported_identities()) {
        TheoremVerdict v = appendix_check(id, 60);
        INFO(id);
        CHECK(v.status == VerdictStatus::pass);
    }
    CHECK_THROWS_AS(appendix_check("bogus", 10), std::invalid_argument);
    CHECK_THROWS_AS(appendix_check("eq4.2", 0), std::invalid_argument);
}

TEST_CASE("compare_pair") {
    std::vector<double> grid{0.0, 0.3, 0.6};
    // P_n is the strict minimum over connected graphs
    auto rows = compare_pair(path_graph(7), t_shape(1, 2, 3), grid);
    for (const auto& row : rows) CHECK(row.sign == -1);
    // T_{1,1,n-3} below anything that is not P_n or C_n (n = 9)
    auto rows2 = compare_pair(t_shape(1, 1, 6), t_shape(1, 2, 5), grid);
    for (const auto& row : rows2) CHECK(row.sign <= 0);
    auto self = compare_pair(cycle_graph(6), cycle_graph(6), grid);
    for (const auto& row : self) CHECK(row.sign == 0);
    CHECK_THROWS_AS(compare_pair(Graph(3), path_graph(3), grid), std::invalid_argument);
}

TEST_CASE("wire formats") {
    SearchReport r = extremal(6, 5, 0.5, Direction::min, GraphClass::all);
    nlohmann::json j = nlohmann::json::parse(to_json(r));
    CHECK(j["schema"] == "report-v1");
    CHECK(j["kind"] == "search-report");
    CHECK(j["n"] == 6);
    CHECK(j["winners"].is_array());
    CHECK(j["winners"].size() == 1);
    CHECK_FALSE(j.contains("elapsed_seconds"));

    std::string csv = to_csv(r);
    CHECK(csv.find("n,i,alpha,direction,class,lambda") == 0);
    CHECK(csv.find("E?Bw") != std::string::npos);

    TheoremVerdict v = verify_theorem("thm3.1", {5, 5}, {0.5});
    nlohmann::json jv = nlohmann::json::parse(to_json(v));
    CHECK(jv["schema"] == "report-v1");
    CHECK(jv["kind"] == "theorem-verdict");
    CHECK(jv["status"] == "pass");
    CHECK(jv["rows"].size() == 1);

    auto rows = compare_pair(path_graph(5), cycle_graph(5), {0.0, 0.5});
    nlohmann::json jc = nlohmann::json::parse(to_json(rows));
    CHECK(jc["rows"].size() == 2);
    std::string ccsv = to_csv(rows);
    CHECK(ccsv.find("alpha,lambda_a,lambda_b,sign") == 0);
}

TEST_CASE("search report json is identical across runs") {
    SearchReport a = extremal(6, 4, 0.25, Direction::min, GraphClass::all);
    SearchReport b = extremal(6, 4, 0.25, Direction::min, GraphClass::all);
    CHECK(to_json(a) == to_json(b));
}
