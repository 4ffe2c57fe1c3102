#include "core/gf_oracle.hpp"

#include <charconv>

namespace pavcf {

graded_series enumerate_gf(stat_family family, const stat_matrix& a, int n_max, int cap) {
    if (n_max < 0) fail(errc::invalid_argument, "length bound must be nonnegative");
    graded_series out(a.cols(), n_max);
    for (int n = 0; n <= n_max; ++n) {
        for_each_avoider_132(
            n,
            [&](const std::vector<int>& word) {
                const permutation p = permutation::from_word(word);
                std::vector<int64_t> exps = detail::weight_exponents_unchecked(p, a, family);
                // exps[0] is the q1 exponent and always equals the length
                out.add_term(n, exp_vec(exps.begin() + 1, exps.end()), 1);
            },
            cap);
    }
    return out;
}

stat_spec stat_spec::parse(std::string_view text) {
    if (text.size() < 2) fail(errc::invalid_argument, "bad statistic spec '" + std::string(text) + "'");
    stat_spec out{stat_family::a, 0, false};
    switch (text[0]) {
    case 'a': out.family = stat_family::a; break;
    case 'e': out.family = stat_family::e; break;
    case 'f': out.family = stat_family::f; break;
    default:
        fail(errc::invalid_argument,
             "bad statistic spec '" + std::string(text) + "': family must be a, e or f");
    }
    const std::string_view rest = text.substr(1);
    if (rest == "*") {
        if (out.family == stat_family::a) {
            fail(errc::invalid_argument, "aggregate totals exist for families e and f only");
        }
        out.aggregate = true;
        return out;
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || k < 1 || k > 9) {
        fail(errc::invalid_argument,
             "bad statistic spec '" + std::string(text) + "': index must be 1..9 or *");
    }
    out.k = k;
    return out;
}

std::map<uint64_t, uint64_t> distribution(std::string_view spec_text, int n, int cap) {
    const stat_spec spec = stat_spec::parse(spec_text);
    std::map<uint64_t, uint64_t> hist;
    for_each_avoider_132(
        n,
        [&](const std::vector<int>& word) {
            const permutation p = permutation::from_word(word);
            const uint64_t value =
                spec.aggregate ? aggregate_total(p, spec.family) : stat(p, spec.family, spec.k);
            ++hist[value];
        },
        cap);
    return hist;
}

} // namespace pavcf
