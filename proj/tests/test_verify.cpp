#include <doctest.h>

#include "core/verify.hpp"

using namespace pavcf;

TEST_CASE("closed forms") {
    CHECK(catalan_number(0) == 1);
    CHECK(catalan_number(5) == 42);
    CHECK(catalan_number(12) == 208012);
    CHECK(narayana_number(4, 1) == 6);
    CHECK(narayana_number(3, 0) == 1);
    CHECK(narayana_number(0, 0) == 1);
    CHECK_THROWS_AS((void)narayana_number(4, 4), error);
    CHECK_THROWS_AS((void)narayana_number(4, -1), error);
    CHECK_THROWS_AS((void)catalan_number(-1), error);

    for (int n = 1; n <= 12; ++n) {
        bigint sum = 0;
        for (int k = 0; k < n; ++k) sum += narayana_number(n, k);
        CHECK(sum == catalan_number(n));
    }
}

TEST_CASE("every check passes at reduced parameters") {
    verify_params quick;
    quick.n = 6;
    quick.tdeg = 5;
    quick.trials = 4;
    for (const auto& id : check_ids()) {
        const report r = run_check(id, quick);
        INFO(r.to_text());
        CHECK(r.pass);
        CHECK_FALSE(r.counter.has_value());
    }
}

TEST_CASE("reports are canonical and deterministic") {
    verify_params quick;
    quick.tdeg = 5;
    quick.trials = 3;
    quick.seed = 99;
    const report a = run_check("bcs2", quick);
    const report b = run_check("bcs2", quick);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_json().find("elapsed") == std::string::npos);
    CHECK(a.to_json().find("\"seed\":\"99\"") != std::string::npos);

    const auto batch1 = reports_to_json(run_all(quick));
    const auto batch2 = reports_to_json(run_all(quick));
    CHECK(batch1 == batch2);
}

TEST_CASE("unknown checks are rejected") {
    CHECK_THROWS_AS((void)run_check("no-such-check", {}), error);
}

TEST_CASE("check list is stable") {
    const auto& ids = check_ids();
    REQUIRE(ids.size() == 15);
    CHECK(ids.front() == "bcs1");
    CHECK(ids.back() == "recursion-delta");
}
