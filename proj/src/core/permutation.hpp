#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace pavcf {

// Default enumeration caps. Both are overridable per call; they exist so a
// mistyped CLI argument cannot ask for 20! permutations.
inline constexpr int k_all_perms_cap = 10;
inline constexpr int k_avoiders_cap = 14;

/// A permutation of {1..n} in one-line notation. The empty permutation is valid.
class permutation {
public:
    permutation() = default;

    /// Validates that `word` is a rearrangement of 1..n.
    static permutation from_word(std::vector<int> word);

    /// Accepts "3,5,4,2,1", or compact digits "35421" when n <= 9.
    /// The empty string denotes the empty permutation.
    static permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    bool empty() const noexcept { return word_.empty(); }

    /// Value at 0-based position.
    int operator[](int pos) const { return word_[static_cast<size_t>(pos)]; }

    const std::vector<int>& word() const noexcept { return word_; }

    /// Comma-separated one-line form, e.g. "3,5,4,2,1"; "" for the empty permutation.
    std::string str() const;

    friend bool operator==(const permutation&, const permutation&) = default;
    friend bool operator<(const permutation& a, const permutation& b) { return a.word_ < b.word_; }

private:
    explicit permutation(std::vector<int> word) : word_(std::move(word)) {}
    std::vector<int> word_;
};

/// All n! permutations of 1..n in lexicographic order of words.
std::vector<permutation> enumerate_all(int n, int cap = k_all_perms_cap);

/// Streams every 132-avoiding permutation of 1..n exactly once, in the
/// generator order documented below, without materializing the list.
///
/// Order: a nonempty avoider decomposes uniquely as (left, n, right) where
/// every value of `left` exceeds every value of `right`. Splits are emitted
/// by left-block size ascending; within a split the left block varies in the
/// outer loop and the right block in the inner loop, each recursively in this
/// same order. The callback receives the word as a const vector reference
/// owned by the enumerator; copy it if it must outlive the call.
template <typename F>
void for_each_avoider_132(int n, F&& emit, int cap = k_avoiders_cap);

/// Materialized list of S_n(1-3-2) in generator order; |result| = Catalan(n).
std::vector<permutation> enumerate_avoiders_132(int n, int cap = k_avoiders_cap);

/// Splits a nonempty 132-avoider at its maximum into (left, right), each
/// renormalized to a permutation of its own length. Rejects permutations
/// containing 1-3-2 and the empty permutation.
std::pair<permutation, permutation> decompose_at_max(const permutation& p);

namespace detail {

// Non-owning callable reference; keeps the recursive generator out of
// template-instantiation recursion and off the heap.
class fn_ref {
public:
    template <typename F>
    fn_ref(F& f) : ctx_(&f), fn_([](void* c) { (*static_cast<F*>(c))(); }) {}
    void operator()() const { fn_(ctx_); }

private:
    void* ctx_;
    void (*fn_)(void*);
};

// Writes 132-avoiding arrangements of the values {lo .. lo+len-1} into
// word[pos .. pos+len), invoking sink() for each completed arrangement.
void gen_avoiders(std::vector<int>& word, int pos, int lo, int len, fn_ref sink);

} // namespace detail

template <typename F>
void for_each_avoider_132(int n, F&& emit, int cap) {
    if (n < 0) fail(errc::invalid_argument, "permutation length must be nonnegative");
    if (n > cap) {
        fail(errc::limit_exceeded,
             "avoider enumeration length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<int> word(static_cast<size_t>(n));
    auto sink = [&] { emit(std::as_const(word)); };
    detail::gen_avoiders(word, 0, 1, n, sink);
}

} // namespace pavcf
