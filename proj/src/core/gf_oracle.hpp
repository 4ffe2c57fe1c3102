#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "core/series.hpp"
#include "core/stat_matrix.hpp"

namespace pavcf {

/// Brute-force generating function: the sum of weight monomials of every
/// 132-avoider of length <= n_max, graded by length. Exact and complete for
/// all grades <= n_max; the series has a.cols() non-grading variables.
graded_series enumerate_gf(stat_family family, const stat_matrix& a, int n_max,
                           int cap = k_avoiders_cap);

/// Statistic selector for distributions: a single statistic like "e2", "a3",
/// or an aggregate "e*" / "f*" (the sum v_2 + v_3 + ...).
struct stat_spec {
    stat_family family;
    int k = 0; // meaningful when !aggregate
    bool aggregate = false;

    static stat_spec parse(std::string_view text);
};

/// Exact histogram of the statistic over S_n(1-3-2); counts sum to
/// Catalan(n). Keys ascend.
std::map<uint64_t, uint64_t> distribution(std::string_view spec_text, int n,
                                          int cap = k_avoiders_cap);

} // namespace pavcf
