#include <doctest.h>

#include "core/pattern.hpp"
#include "oracles.hpp"

using namespace pavcf;

TEST_CASE("dash notation parses") {
    auto classical = generalized_pattern::parse("1-3-2");
    CHECK(classical.word() == permutation::parse("132"));
    CHECK(classical.classical());

    auto vincular = generalized_pattern::parse("23-1");
    CHECK(vincular.word() == permutation::parse("231"));
    CHECK(vincular.glued(1));
    CHECK_FALSE(vincular.glued(2));

    auto glued_pair = generalized_pattern::parse("12");
    CHECK(glued_pair.word() == permutation::parse("12"));
    CHECK(glued_pair.glued(1));

    CHECK(generalized_pattern::parse("21-3-4").str() == "21-3-4");
    CHECK(generalized_pattern::parse("1").str() == "1");

    CHECK_THROWS_AS((void)generalized_pattern::parse(""), error);
    CHECK_THROWS_AS((void)generalized_pattern::parse("-1"), error);
    CHECK_THROWS_AS((void)generalized_pattern::parse("1-"), error);
    CHECK_THROWS_AS((void)generalized_pattern::parse("1--2"), error);
    CHECK_THROWS_AS((void)generalized_pattern::parse("1-3"), error);
    CHECK_THROWS_AS((void)generalized_pattern::parse("1x2"), error);
}

TEST_CASE("worked occurrence counts") {
    const auto host = permutation::parse("35421");
    CHECK(count_occurrences(generalized_pattern::parse("23-1"), host) == 2);
    CHECK(count_occurrences(generalized_pattern::parse("2-3-1"), host) == 4);
    CHECK(count_occurrences(generalized_pattern::parse("1-3-2"), host) == 1);
    CHECK(count_occurrences(generalized_pattern::parse("1-2-3"), permutation::parse("21")) == 0);
}

TEST_CASE("avoidance") {
    CHECK_FALSE(avoids(permutation::parse("35421"), generalized_pattern::parse("1-3-2")));
    CHECK(avoids(permutation::parse("123456"), generalized_pattern::parse("21")));
    CHECK(avoids(permutation{}, generalized_pattern::parse("1-2")));
    CHECK(avoids(permutation{}, generalized_pattern::parse("1")));
}

TEST_CASE("matcher equals naive tuple enumeration on every small instance") {
    // every host of length <= 7, every pattern word of length <= 4, every glue set
    uint64_t mismatches = 0;
    for (int k = 1; k <= 4; ++k) {
        for (const auto& word : enumerate_all(k)) {
            for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                const generalized_pattern p(word, mask);
                for (int n = 0; n <= 7; ++n) {
                    for (const auto& host : enumerate_all(n)) {
                        if (count_occurrences(p, host) != testing::naive_count(p, host)) {
                            ++mismatches;
                        }
                    }
                }
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("more glue never increases the count") {
    for (int k = 2; k <= 4; ++k) {
        for (const auto& word : enumerate_all(k)) {
            for (uint32_t small = 0; small < (1u << (k - 1)); ++small) {
                for (uint32_t big = small; big < (1u << (k - 1)); ++big) {
                    if ((big & small) != small) continue; // need small subset of big
                    const generalized_pattern loose(word, small);
                    const generalized_pattern tight(word, big);
                    for (int n = 0; n <= 6; ++n) {
                        for (const auto& host : enumerate_all(n)) {
                            CHECK(count_occurrences(tight, host) <= count_occurrences(loose, host));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("classical counts survive reverse-complement of pattern and host") {
    for (int k = 2; k <= 3; ++k) {
        for (const auto& word : enumerate_all(k)) {
            const generalized_pattern p(word, 0);
            const generalized_pattern rc(testing::reverse_complement(word), 0);
            for (int n = 0; n <= 6; ++n) {
                for (const auto& host : enumerate_all(n)) {
                    CHECK(count_occurrences(p, host) ==
                          count_occurrences(rc, testing::reverse_complement(host)));
                }
            }
        }
    }
}
