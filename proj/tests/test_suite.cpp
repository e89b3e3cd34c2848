#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critval/suite.hpp"

using namespace critval;

TEST_CASE("small grid sweep: everything passes") {
    SuiteConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 2;
    cfg.a_max = 1;
    cfg.b_max = 1;
    SuiteReport r = run_suite(cfg);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.skipped == 0);
    CHECK(r.summary.pass > 0);
    CHECK(r.summary.pass == static_cast<int>(r.cases.size()));
}

TEST_CASE("report ordering is fixed by (check, instance)") {
    SuiteConfig cfg;
    cfg.n_max = 2;
    cfg.a_max = 1;
    cfg.b_max = 0;
    cfg.checks = {"theorem-b", "theorem-a", "cauchy"};  // deliberately unsorted
    SuiteReport r = run_suite(cfg);
    for (std::size_t i = 1; i < r.cases.size(); ++i) {
        const auto &a = r.cases[i - 1], &b = r.cases[i];
        bool ordered = a.name < b.name ||
                       (a.name == b.name &&
                        std::tie(a.instance.n, a.instance.a, a.instance.b) <=
                            std::tie(b.instance.n, b.instance.a, b.instance.b));
        CHECK(ordered);
    }
}

TEST_CASE("determinism: identical config and seed give identical bytes") {
    SuiteConfig cfg;
    cfg.n_max = 2;
    cfg.a_max = 1;
    cfg.b_max = 0;
    cfg.mode = CheckMode::evaluate(5, 12345);
    cfg.checks = {"theorem-a", "theorem-b"};
    std::string r1 = report_to_string(run_suite(cfg));
    std::string r2 = report_to_string(run_suite(cfg));
    CHECK(r1 == r2);
}

TEST_CASE("tiny budget: mostly skipped, zero fail") {
    SuiteConfig cfg;
    cfg.n_max = 2;
    cfg.a_max = 1;
    cfg.b_max = 1;
    cfg.budget = 10;
    cfg.checks = {"theorem-a", "recurrence-integrand"};
    SuiteReport r = run_suite(cfg);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.skipped > 0);
}

TEST_CASE("unknown check id is rejected") {
    SuiteConfig cfg;
    cfg.checks = {"theorem-c"};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("every advertised check id runs") {
    SuiteConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 2;
    cfg.a_max = 1;
    cfg.b_max = 0;
    SuiteReport r = run_suite(cfg);  // empty checks -> all
    std::set<std::string> seen;
    for (const auto& c : r.cases) seen.insert(c.name);
    for (const auto& info : all_checks()) {
        INFO(info.id);
        CHECK(seen.count(info.id) == 1);
    }
}
