#include <doctest.h>

#include "core/gf_oracle.hpp"
#include "core/verify.hpp"

using namespace pavcf;

namespace {

stat_matrix ascent_marker() {
    stat_matrix a(1, 1);
    a.set(1, 1, 1);
    return a;
}

} // namespace

TEST_CASE("enumeration gf over the ascent marker") {
    const auto s = enumerate_gf(stat_family::e, ascent_marker(), 3);
    CHECK(s.coeff(0, {0}) == 1);
    CHECK(s.coeff(1, {0}) == 1);
    CHECK(s.coeff(2, {0}) == 1);
    CHECK(s.coeff(2, {1}) == 1);
    CHECK(s.coeff(3, {0}) == 1);
    CHECK(s.coeff(3, {1}) == 3);
    CHECK(s.coeff(3, {2}) == 1);

    const auto f = enumerate_gf(stat_family::f, ascent_marker(), 3);
    CHECK(f == s); // ascents and descents are equidistributed over avoiders

    const auto trivial = enumerate_gf(stat_family::a, ascent_marker(), 0);
    CHECK(trivial.trunc() == 0);
    CHECK(trivial.coeff(0, {0}) == 1);
}

TEST_CASE("grade-n content of the zero-matrix gf is Catalan") {
    const auto s = enumerate_gf(stat_family::e, stat_matrix::zero(1, 1), 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(s.coeff(n, {0}) == catalan_number(n));
        CHECK(s.at(n).term_count() == 1);
    }
}

TEST_CASE("statistic spec parsing") {
    CHECK(stat_spec::parse("e2").family == stat_family::e);
    CHECK(stat_spec::parse("e2").k == 2);
    CHECK_FALSE(stat_spec::parse("e2").aggregate);
    CHECK(stat_spec::parse("a3").family == stat_family::a);
    CHECK(stat_spec::parse("f*").aggregate);
    CHECK_THROWS_AS((void)stat_spec::parse("a*"), error);
    CHECK_THROWS_AS((void)stat_spec::parse("x2"), error);
    CHECK_THROWS_AS((void)stat_spec::parse("e0"), error);
    CHECK_THROWS_AS((void)stat_spec::parse("e10"), error);
    CHECK_THROWS_AS((void)stat_spec::parse("e"), error);
}

TEST_CASE("distributions") {
    const auto e2_4 = distribution("e2", 4);
    CHECK(e2_4 == std::map<uint64_t, uint64_t>{{0, 1}, {1, 6}, {2, 6}, {3, 1}});
    const auto f2_3 = distribution("f2", 3);
    CHECK(f2_3 == std::map<uint64_t, uint64_t>{{0, 1}, {1, 3}, {2, 1}});
    const auto e2_1 = distribution("e2", 1);
    CHECK(e2_1 == std::map<uint64_t, uint64_t>{{0, 1}});

    for (int n = 1; n <= 8; ++n) {
        CHECK(distribution("e2", n) == distribution("f2", n));
        uint64_t total = 0;
        for (const auto& [k, count] : distribution("e*", n)) total += count;
        CHECK(bigint(total) == catalan_number(n));
    }
    CHECK_THROWS_AS((void)distribution("e2", 15), error);
}
