#include <doctest.h>

#include "ptchain/analysis.hpp"
#include "ptchain/io.hpp"

using namespace ptchain;

namespace {
PermutationTableau tab(const std::string& key) { return PermutationTableau::parse_key(key); }
}  // namespace

TEST_CASE("tableau JSON") {
    auto t = tab("1100|0010|1111|001");
    CHECK(tableau_to_json(t) ==
          R"({"rows":[[1,1,0,0],[0,0,1,0],[1,1,1,1],[0,0,1]],"shape":[4,4,4,3]})");
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
    CHECK(tableau_from_json(R"({"rows":[[1],[1]]})") == tab("1|1"));
    CHECK(tableau_from_json(R"({"shape":[0,0],"rows":[[],[]]})") == tab("|"));
    CHECK_THROWS_AS(tableau_from_json(R"({"shape":[2],"rows":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(tableau_from_json(R"({"rows":[[2]]})"), std::invalid_argument);
    CHECK_THROWS_AS(tableau_from_json(R"({"rows":[[1],[1,1]]})"), std::invalid_argument);

    for (const auto& x : enumerate_tableaux(5))
        CHECK(tableau_from_json(tableau_to_json(x)) == x);
}

TEST_CASE("distribution CSV") {
    auto sys = build_system(ChainKind::Pasep, 1);
    PasepParams p{make_rational(0), make_rational(1, 3), make_rational(2, 3), 1};
    auto dist = stationary_exact(sys, p);
    CHECK(distribution_to_csv(sys, dist) ==
          "state,probability_num,probability_den\n"
          "0,2,3\n"
          "1,1,3\n");
}

TEST_CASE("rate labels in DOT output") {
    auto dot = system_to_dot(build_system(ChainKind::Pt, 3));
    CHECK(dot.find("digraph pt_n3 {") == 0);
    CHECK(dot.find("[label=\"a/4\"]") != std::string::npos);
    CHECK(dot.find("[label=\"b/4\"]") != std::string::npos);
    CHECK(dot.find("[label=\"q/4\"]") != std::string::npos);
    CHECK(dot.find("[label=\"1/4\"]") != std::string::npos);
    // node labels carry the projected word and the state key
    CHECK(dot.find("[label=\"100\\n11|11\"]") != std::string::npos);
}

TEST_CASE("move-list JSON") {
    auto moves = moves_to_json(tab("1"));
    CHECK(moves ==
          R"([{"kind":"enter_left","rate":"a/2","row_index":1,"site_index":1,)"
          R"("target":{"rows":[[],[]],"shape":[0,0]}}])");
}

TEST_CASE("report JSON") {
    SuiteReport report;
    report.suite = "balance";
    report.n_max = 2;
    report.checks = 8;
    CHECK(report_to_json(report) ==
          R"({"checks":8,"n_max":2,"suite":"balance","violations":[]})");
    report.violations.push_back("broken");
    CHECK(report_to_json(report).find("\"violations\":[\"broken\"]") != std::string::npos);
}

TEST_CASE("verification suites pass at small sizes") {
    CHECK(run_balance_suite(3).ok());
    CHECK(run_projection_suite(2).ok());
    CHECK(run_bijection_suite(5).ok());
    CHECK(run_involution_suite(4).ok());
    CHECK(run_outrates_suite(4).ok());
    CHECK_THROWS_AS(run_suite("nonsense", 3), std::invalid_argument);
}
