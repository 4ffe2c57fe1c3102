#include "core/statistics.hpp"

#include <algorithm>

namespace pavcf {

generalized_pattern stat_pattern(stat_family family, int k) {
    if (k < 1) fail(errc::invalid_argument, "statistic index must be >= 1 (k=0 is the constant 1)");
    if (k > 9) fail(errc::invalid_argument, "statistic index exceeds the 9-letter pattern limit");
    std::vector<int> word(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) word[static_cast<size_t>(i)] = i + 1;
    uint32_t glued = 0;
    switch (family) {
    case stat_family::a:
        break;
    case stat_family::e:
        if (k >= 2) glued = 1u;
        break;
    case stat_family::f:
        if (k >= 2) {
            std::swap(word[0], word[1]);
            glued = 1u;
        }
        break;
    }
    return generalized_pattern(permutation::from_word(std::move(word)), glued);
}

uint64_t stat(const permutation& p, stat_family family, int k) {
    if (k < 1) fail(errc::invalid_argument, "statistic index must be >= 1 (k=0 is the constant 1)");
    if (k > p.size()) return 0; // patterns longer than the host cannot occur
    return count_occurrences(stat_pattern(family, k), p);
}

stat_vec stat_vector(const permutation& p, stat_family family, int kmax) {
    if (kmax < 1) fail(errc::invalid_argument, "kmax must be >= 1");
    stat_vec out{family, std::vector<uint64_t>(static_cast<size_t>(kmax), 0)};
    for (int k = 1; k <= kmax; ++k) out.values[static_cast<size_t>(k - 1)] = stat(p, family, k);
    return out;
}

namespace {

// Recursion over the (left, max, right) decomposition, on index ranges of the
// original word. Value renormalization never changes any statistic, so the
// blocks are processed in place. The block condition min(left) > max(right)
// is verified at every level; a violation is exactly a 1-3-2 occurrence.
void stat_fast_rec(const std::vector<int>& word, int begin, int end, bool family_e, int kmax,
                   std::vector<uint64_t>& out) {
    std::fill(out.begin(), out.end(), uint64_t{0});
    if (begin == end) return;
    int max_pos = begin;
    for (int i = begin + 1; i < end; ++i) {
        if (word[static_cast<size_t>(i)] > word[static_cast<size_t>(max_pos)]) max_pos = i;
    }
    int left_min = word[static_cast<size_t>(max_pos)];
    for (int i = begin; i < max_pos; ++i) left_min = std::min(left_min, word[static_cast<size_t>(i)]);
    for (int i = max_pos + 1; i < end; ++i) {
        if (word[static_cast<size_t>(i)] > left_min) {
            fail(errc::invalid_argument, "permutation contains 1-3-2; fast recursion is invalid");
        }
    }

    std::vector<uint64_t> left(out.size()), right(out.size());
    stat_fast_rec(word, begin, max_pos, family_e, kmax, left);
    stat_fast_rec(word, max_pos + 1, end, family_e, kmax, right);

    const bool left_nonempty = max_pos > begin;
    const bool right_nonempty = max_pos + 1 < end;
    out[0] = left[0] + right[0] + 1;
    if (kmax >= 2) {
        const bool gains_pair = family_e ? left_nonempty : right_nonempty;
        out[1] = left[1] + right[1] + (gains_pair ? 1 : 0);
    }
    for (int k = 3; k <= kmax; ++k) {
        out[static_cast<size_t>(k - 1)] =
            left[static_cast<size_t>(k - 1)] + left[static_cast<size_t>(k - 2)] + right[static_cast<size_t>(k - 1)];
    }
}

} // namespace

stat_vec stat_fast(const permutation& p, stat_family family, int kmax) {
    if (kmax < 1) fail(errc::invalid_argument, "kmax must be >= 1");
    if (family == stat_family::a) {
        fail(errc::invalid_argument, "fast recursion is defined for families e and f only");
    }
    stat_vec out{family, std::vector<uint64_t>(static_cast<size_t>(kmax), 0)};
    stat_fast_rec(p.word(), 0, p.size(), family == stat_family::e, kmax, out.values);
    return out;
}

uint64_t aggregate_total(const permutation& p, stat_family family) {
    if (family == stat_family::a) {
        fail(errc::invalid_argument, "aggregate totals are defined for families e and f only");
    }
    uint64_t total = 0;
    for (int k = 2; k <= p.size(); ++k) total += stat(p, family, k);
    return total;
}

} // namespace pavcf
