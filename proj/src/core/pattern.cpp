#include "core/pattern.hpp"

namespace pavcf {

generalized_pattern::generalized_pattern(permutation word, uint32_t glued_mask)
    : word_(std::move(word)), glued_mask_(glued_mask) {
    if (word_.empty()) fail(errc::invalid_argument, "pattern must be nonempty");
    if (word_.size() > 9) fail(errc::invalid_argument, "patterns are limited to 9 letters");
    const uint32_t valid = (1u << (word_.size() - 1)) - 1u;
    if (glued_mask_ & ~valid) fail(errc::invalid_argument, "glued position out of range");
}

generalized_pattern generalized_pattern::parse(std::string_view text) {
    std::vector<int> letters;
    uint32_t glued = 0;
    bool expect_letter = true;
    for (char c : text) {
        if (c == '-') {
            if (expect_letter || letters.empty()) {
                fail(errc::invalid_argument, "bad pattern text: misplaced dash in '" + std::string(text) + "'");
            }
            expect_letter = true;
            continue;
        }
        if (c < '1' || c > '9') {
            fail(errc::invalid_argument, std::string("bad pattern text: unexpected character '") + c + "'");
        }
        if (!expect_letter) {
            // two letters with no dash between them: glue them
            glued |= 1u << (letters.size() - 1);
        }
        letters.push_back(c - '0');
        expect_letter = false;
    }
    if (expect_letter || letters.empty()) {
        fail(errc::invalid_argument, "bad pattern text: '" + std::string(text) + "'");
    }
    return generalized_pattern(permutation::from_word(std::move(letters)), glued);
}

std::string generalized_pattern::str() const {
    std::string out;
    for (int j = 1; j <= length(); ++j) {
        out += static_cast<char>('0' + word_[j - 1]);
        if (j < length() && !glued(j)) out += '-';
    }
    return out;
}

namespace {

// Depth-first extension over pattern positions. `idx[0..depth)` holds the
// chosen host indices; a glued position forces the next index. The partial
// order-isomorphism check compares the candidate value against every chosen
// value, mirroring the pattern word's comparisons.
struct matcher {
    const generalized_pattern& p;
    const permutation& host;
    bool stop_at_first;
    uint64_t count = 0;
    std::vector<int> idx;

    matcher(const generalized_pattern& pat, const permutation& h, bool stop)
        : p(pat), host(h), stop_at_first(stop) {
        idx.resize(static_cast<size_t>(p.length()));
    }

    bool consistent(int depth, int candidate) const {
        const int pv = p.word()[depth];
        const int hv = host[candidate];
        for (int t = 0; t < depth; ++t) {
            const bool pattern_less = p.word()[t] < pv;
            const bool host_less = host[idx[static_cast<size_t>(t)]] < hv;
            if (pattern_less != host_less) return false;
        }
        return true;
    }

    // Returns true when the search should stop (first match found in
    // stop_at_first mode).
    bool extend(int depth) {
        if (depth == p.length()) {
            ++count;
            return stop_at_first;
        }
        if (depth > 0 && p.glued(depth)) {
            const int forced = idx[static_cast<size_t>(depth - 1)] + 1;
            if (forced >= host.size()) return false;
            if (!consistent(depth, forced)) return false;
            idx[static_cast<size_t>(depth)] = forced;
            return extend(depth + 1);
        }
        const int start = depth == 0 ? 0 : idx[static_cast<size_t>(depth - 1)] + 1;
        // Prune: remaining pattern letters still need room on the right.
        const int last_start = host.size() - (p.length() - depth);
        for (int i = start; i <= last_start; ++i) {
            if (!consistent(depth, i)) continue;
            idx[static_cast<size_t>(depth)] = i;
            if (extend(depth + 1)) return true;
        }
        return false;
    }
};

} // namespace

uint64_t count_occurrences(const generalized_pattern& p, const permutation& host) {
    if (p.length() > host.size()) return 0;
    matcher m(p, host, false);
    m.extend(0);
    return m.count;
}

bool contains(const permutation& host, const generalized_pattern& p) {
    if (p.length() > host.size()) return false;
    matcher m(p, host, true);
    m.extend(0);
    return m.count > 0;
}

} // namespace pavcf
