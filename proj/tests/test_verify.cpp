#include "doctest.h"

#include "sawlab/verify.hpp"

using namespace sawlab;

TEST_CASE("multi-valued map bound on toy inputs") {
    auto fan = mvm_check(1, 2, {{0, 0}, {0, 1}});
    CHECK(fan.m == 2);
    CHECK(fan.M == 1);
    CHECK(fan.bound_ok);

    std::vector<std::pair<uint64_t, uint64_t>> id_arrows;
    for (uint64_t i = 0; i < 5; ++i) id_arrows.push_back({i, i});
    auto ident = mvm_check(5, 5, id_arrows);
    CHECK(ident.m == 1);
    CHECK(ident.M == 1);
    CHECK(ident.bound_ok);

    // collapsing map: 3 -> 1 with one outgoing arrow each fails the bound check
    auto collapse = mvm_check(3, 1, {{0, 0}, {1, 0}, {2, 0}});
    CHECK(collapse.m == 1);
    CHECK(collapse.M == 3);
    CHECK(collapse.bound_ok); // 1 >= 1 * 3 / 3

    CHECK_THROWS_AS(mvm_check(0, 1, {}), error);
}

TEST_CASE("suite names are stable") {
    auto names = suite_names();
    CHECK(names.size() == 15);
    CHECK(names.front() == "oracle_counts");
    CHECK(names.back() == "mvm_phisap");
}

TEST_CASE("default suite passes at a small cap") {
    SuiteConfig cfg;
    cfg.max_n = 6;
    auto report = run_verification_suite(cfg);
    CHECK(report.all_passed);
    CHECK(report.checks.size() == 15);
    for (const auto& c : report.checks) CHECK(c.status == CheckStatus::passed);
}

TEST_CASE("single-suite selection") {
    SuiteConfig cfg;
    cfg.max_n = 9;
    cfg.suites = {"closing_identity"};
    auto report = run_verification_suite(cfg);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].name == "closing_identity");
    CHECK(report.checks[0].status == CheckStatus::passed);
}

TEST_CASE("tiny budgets surface as skipped checks") {
    SuiteConfig cfg;
    cfg.max_n = 8;
    cfg.budget = 10;
    cfg.suites = {"oracle_counts"};
    auto report = run_verification_suite(cfg);
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].status == CheckStatus::skipped);
    CHECK(report.checks[0].detail.find("skipped") == 0);
    CHECK(report.all_passed); // skipped is not failed
}

TEST_CASE("report determinism modulo timing") {
    SuiteConfig cfg;
    cfg.max_n = 6;
    cfg.suites = {"class_bounds", "surgery_roundtrip"};
    auto a = run_verification_suite(cfg).to_json(false);
    auto b = run_verification_suite(cfg).to_json(false);
    CHECK(a == b);
}
