#include <doctest.h>

#include <random>

#include "core/serialize.hpp"
#include "core/series.hpp"

using namespace pavcf;

namespace {

graded_series random_series(std::mt19937_64& rng, int vars, int trunc, bool unit_lead) {
    graded_series s(vars, trunc);
    if (unit_lead) {
        s.add_term(0, exp_vec(static_cast<size_t>(vars), 0), (rng() % 2) ? 1 : -1);
    }
    const int terms = 3 + static_cast<int>(rng() % 8);
    for (int t = 0; t < terms; ++t) {
        const int grade = static_cast<int>(rng() % (static_cast<uint64_t>(trunc) + 1));
        if (unit_lead && grade == 0) continue;
        exp_vec e(static_cast<size_t>(vars));
        for (auto& x : e) x = static_cast<int64_t>(rng() % 7) - 3;
        s.add_term(grade, std::move(e), static_cast<int64_t>(rng() % 19) - 9);
    }
    return s;
}

} // namespace

TEST_CASE("laurent polynomial basics") {
    auto p = laurent_poly::monomial(2, {1, -2}, 3);
    p.add_term({0, 0}, 4);
    p.add_term({1, -2}, -3); // cancels to zero and is dropped
    CHECK(p.term_count() == 1);
    CHECK(p.coeff({0, 0}) == 4);
    CHECK(p.coeff({5, 5}) == 0);
    CHECK_FALSE(p.is_unit_constant());
    CHECK(laurent_poly::constant(2, -1).is_unit_constant());
    CHECK_THROWS_AS((void)(laurent_poly::constant(1, 1) + laurent_poly::constant(2, 1)), error);
}

TEST_CASE("series arithmetic") {
    const int n = 6;
    const auto one = graded_series::one(0, n);
    const auto t = graded_series::monomial(0, n, 1, {}, 1);
    CHECK((one + t) * (one - t) == one - t * t);
    CHECK(one + graded_series(0, n) == one);

    graded_series geometric(0, n);
    for (int d = 0; d <= n; ++d) geometric.add_term(d, {}, 1);
    CHECK(geometric * (one - t) == one);

    graded_series quadratic(0, n);
    quadratic.add_term(0, {}, 1);
    quadratic.add_term(1, {}, 1);
    quadratic.add_term(2, {}, 2);
    CHECK(quadratic.coeff(2, {}) == 2);
    CHECK(quadratic.coeff(5, {}) == 0);
    CHECK_THROWS_AS((void)quadratic.coeff(7, {}), error);
}

TEST_CASE("inversion") {
    const int n = 8;
    const auto one = graded_series::one(0, n);
    const auto t = graded_series::monomial(0, n, 1, {}, 1);
    const auto geom = series_invert(one - t);
    for (int d = 0; d <= n; ++d) CHECK(geom.coeff(d, {}) == 1);

    // (-1 + t x) inverts to -1 - tx - t^2 x^2 - ...
    auto s = graded_series::monomial(1, n, 0, {0}, -1);
    s.add_term(1, {1}, 1);
    const auto inv = series_invert(s);
    for (int d = 0; d <= n; ++d) {
        CHECK(inv.coeff(d, {d}) == -1);
    }

    CHECK_THROWS_AS((void)series_invert(t), error);
    CHECK_THROWS_AS((void)series_invert(one + one), error);
}

TEST_CASE("ring laws and inversion correctness on random operands") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 3);
        const int trunc = 3 + static_cast<int>(rng() % 4);
        const auto a = random_series(rng, vars, trunc, false);
        const auto b = random_series(rng, vars, trunc, false);
        const auto c = random_series(rng, vars, trunc, false);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        const auto u = random_series(rng, vars, trunc, true);
        CHECK(u * series_invert(u) == graded_series::one(vars, trunc));
    }
}

TEST_CASE("monomial multiplication shifts grades and exponents") {
    const int n = 4;
    auto s = graded_series::one(1, n);
    s.add_term(2, {3}, 7);
    const auto shifted = mul_monomial(s, 1, {-1});
    CHECK(shifted.coeff(1, {-1}) == 1);
    CHECK(shifted.coeff(3, {2}) == 7);
    CHECK(shifted.coeff(0, {0}) == 0);
}

TEST_CASE("series json serialization") {
    auto s = graded_series::one(2, 1);
    s.add_term(1, {2, -1}, 5);
    s.add_term(1, {0, 0}, -12);
    const std::string json = series_to_json(s);
    CHECK(json ==
          R"([{"grade":0,"terms":[{"exponents":{},"coefficient":"1"}]},)"
          R"({"grade":1,"terms":[{"exponents":{},"coefficient":"-12"},)"
          R"({"exponents":{"q2":2,"q3":-1},"coefficient":"5"}]}])");
}
