#pragma once

#include <cstdint>
#include <vector>

#include "core/pattern.hpp"
#include "core/permutation.hpp"

namespace pavcf {

/// The three pattern-statistic families:
///   a_k = occurrences of the classical increasing pattern 1-2-...-k
///   e_k = occurrences of 12-3-...-k (adjacent ascent, then larger letters)
///   f_k = occurrences of 21-3-...-k (adjacent descent, then larger letters)
/// For every family the k=1 statistic is the length; e_2/f_2 count adjacent
/// ascents/descents.
enum class stat_family : char { a = 'a', e = 'e', f = 'f' };

/// The pattern whose occurrence count defines the k-th statistic of `family`.
generalized_pattern stat_pattern(stat_family family, int k);

/// Statistic value via the generic matcher; k >= 1, any host.
uint64_t stat(const permutation& p, stat_family family, int k);

/// Values v_1..v_kmax of one family for one permutation. Index 0 of the
/// family is the constant 1 by convention and is not stored.
struct stat_vec {
    stat_family family;
    std::vector<uint64_t> values; // values[i] = v_{i+1}

    /// v_k with the k=0 convention; k beyond kmax is an error.
    uint64_t at(int k) const {
        if (k == 0) return 1;
        return values.at(static_cast<size_t>(k - 1));
    }
    int kmax() const noexcept { return static_cast<int>(values.size()); }

    friend bool operator==(const stat_vec&, const stat_vec&) = default;
};

/// Full vector via the generic matcher (source of truth).
stat_vec stat_vector(const permutation& p, stat_family family, int kmax);

/// Fast path for families e and f on 132-avoiding hosts, by recursion on the
/// decomposition at the maximum:
///   v_k = v_k(left) + v_{k-1}(left) + v_k(right)       for k >= 3
///   e_2 = e_2(left) + e_2(right) + [left nonempty]
///   f_2 = f_2(left) + f_2(right) + [right nonempty]
///   v_1 = v_1(left) + v_1(right) + 1
/// Rejects hosts containing 1-3-2 (the block condition is checked at every
/// level of the recursion, which is equivalent to full avoidance).
stat_vec stat_fast(const permutation& p, stat_family family, int kmax);

/// Sum v_2 + v_3 + ... + v_n for family e or f; counts the 2-increasing
/// (resp. almost-2-increasing) configurations of the host.
uint64_t aggregate_total(const permutation& p, stat_family family);

} // namespace pavcf
