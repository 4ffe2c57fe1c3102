#include "core/permutation.hpp"

#include <algorithm>
#include <charconv>

#include "core/pattern.hpp"

namespace pavcf {

namespace detail {

void gen_avoiders(std::vector<int>& word, int pos, int lo, int len, fn_ref sink) {
    if (len == 0) {
        sink();
        return;
    }
    for (int left = 0; left < len; ++left) {
        const int right = len - 1 - left;
        word[static_cast<size_t>(pos + left)] = lo + len - 1;
        auto emit_right = [&] { gen_avoiders(word, pos + left + 1, lo, right, sink); };
        if (left == 0) {
            emit_right();
        } else {
            gen_avoiders(word, pos, lo + right, left, emit_right);
        }
    }
}

} // namespace detail

permutation permutation::from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : word) {
        if (v < 1 || v > n) {
            fail(errc::invalid_argument,
                 "not a permutation of 1.." + std::to_string(n) + ": value " + std::to_string(v));
        }
        if (seen[static_cast<size_t>(v - 1)]) {
            fail(errc::invalid_argument, "not a permutation: duplicate value " + std::to_string(v));
        }
        seen[static_cast<size_t>(v - 1)] = 1;
    }
    return permutation(std::move(word));
}

permutation permutation::parse(std::string_view text) {
    if (text.empty()) return permutation{};
    std::vector<int> word;
    if (text.find(',') == std::string_view::npos) {
        // compact digit form, one letter per value; only meaningful for n <= 9
        for (char c : text) {
            if (c < '1' || c > '9') {
                fail(errc::invalid_argument,
                     std::string("bad permutation text: unexpected character '") + c + "'");
            }
            word.push_back(c - '0');
        }
        return from_word(std::move(word));
    }
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            fail(errc::invalid_argument, "bad permutation text: field '" + std::string(field) + "'");
        }
        word.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_word(std::move(word));
}

std::string permutation::str() const {
    std::string out;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

std::vector<permutation> enumerate_all(int n, int cap) {
    if (n < 0) fail(errc::invalid_argument, "permutation length must be nonnegative");
    if (n > cap) {
        fail(errc::limit_exceeded,
             "full enumeration length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
    std::vector<permutation> out;
    do {
        out.push_back(permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<permutation> enumerate_avoiders_132(int n, int cap) {
    std::vector<permutation> out;
    for_each_avoider_132(
        n, [&](const std::vector<int>& word) { out.push_back(permutation::from_word(word)); }, cap);
    return out;
}

std::pair<permutation, permutation> decompose_at_max(const permutation& p) {
    if (p.empty()) fail(errc::invalid_argument, "cannot decompose the empty permutation");
    const int n = p.size();
    static const generalized_pattern p132 = generalized_pattern::parse("1-3-2");
    if (!avoids(p, p132)) {
        fail(errc::invalid_argument, "permutation contains 1-3-2; decomposition blocks are invalid");
    }
    int max_pos = 0;
    while (p[max_pos] != n) ++max_pos;
    // Left block holds the |left| largest values below n; shift to renormalize.
    const int right_len = n - 1 - max_pos;
    std::vector<int> left, right;
    left.reserve(static_cast<size_t>(max_pos));
    right.reserve(static_cast<size_t>(right_len));
    for (int i = 0; i < max_pos; ++i) left.push_back(p[i] - right_len);
    for (int i = max_pos + 1; i < n; ++i) right.push_back(p[i]);
    return {permutation::from_word(std::move(left)), permutation::from_word(std::move(right))};
}

} // namespace pavcf
