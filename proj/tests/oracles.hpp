#pragma once

// Test-only reference implementations, deliberately independent of the
// library's matcher: occurrences are counted by enumerating every index
// tuple and checking the definition directly.

#include <cstdint>
#include <vector>

#include "core/pattern.hpp"
#include "core/permutation.hpp"

namespace pavcf::testing {

inline uint64_t naive_count(const generalized_pattern& p, const permutation& host) {
    const int k = p.length();
    const int n = host.size();
    if (k > n) return 0;
    uint64_t count = 0;
    std::vector<int> idx(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int depth, int next) -> void {
        if (depth == k) {
            for (int j = 1; j < k; ++j) {
                if (p.glued(j) && idx[static_cast<size_t>(j)] != idx[static_cast<size_t>(j - 1)] + 1) {
                    return;
                }
            }
            for (int s = 0; s < k; ++s) {
                for (int t = s + 1; t < k; ++t) {
                    const bool pattern_less = p.word()[s] < p.word()[t];
                    const bool host_less = host[idx[static_cast<size_t>(s)]] < host[idx[static_cast<size_t>(t)]];
                    if (pattern_less != host_less) return;
                }
            }
            ++count;
            return;
        }
        for (int i = next; i < n; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

inline permutation reverse_complement(const permutation& p) {
    const int n = p.size();
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = n + 1 - p[n - 1 - i];
    return permutation::from_word(std::move(word));
}

} // namespace pavcf::testing
