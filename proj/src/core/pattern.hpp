#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "core/permutation.hpp"

namespace pavcf {

/// A vincular pattern: a pattern word plus adjacency constraints. Position
/// j (1-based, j < k) is "glued" when pattern letters j and j+1 must sit at
/// consecutive positions of the host. A classical pattern has no glued
/// positions; in dash notation every pair of letters is separated by a dash.
class generalized_pattern {
public:
    generalized_pattern(permutation word, uint32_t glued_mask);

    /// Dash notation: single-digit letters, a dash between letters j and j+1
    /// meaning "no adjacency required". "1-3-2" is classical; "23-1" glues
    /// the first two letters; "12" is fully glued.
    static generalized_pattern parse(std::string_view text);

    const permutation& word() const noexcept { return word_; }
    int length() const noexcept { return word_.size(); }

    /// True when pattern positions j and j+1 (1 <= j < k) must be adjacent.
    bool glued(int j) const { return (glued_mask_ >> (j - 1)) & 1u; }
    bool classical() const noexcept { return glued_mask_ == 0; }
    uint32_t glued_mask() const noexcept { return glued_mask_; }

    std::string str() const;

    friend bool operator==(const generalized_pattern&, const generalized_pattern&) = default;

private:
    permutation word_;
    uint32_t glued_mask_ = 0;
};

/// Number of occurrences of `p` in `host`: index tuples i_1 < ... < i_k,
/// consecutive where glued, whose values are order-isomorphic to the pattern
/// word. Zero when the pattern is longer than the host.
uint64_t count_occurrences(const generalized_pattern& p, const permutation& host);

/// True iff at least one occurrence exists (early exit).
bool contains(const permutation& host, const generalized_pattern& p);

inline bool avoids(const permutation& host, const generalized_pattern& p) {
    return !contains(host, p);
}

} // namespace pavcf
