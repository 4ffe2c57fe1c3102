#include "core/stat_matrix.hpp"

#include <algorithm>

namespace pavcf {

stat_matrix::stat_matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) fail(errc::invalid_argument, "matrix dimensions must be >= 1");
}

stat_matrix stat_matrix::identity(int n) {
    stat_matrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, 1);
    return m;
}

int64_t stat_matrix::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void stat_matrix::set(int i, int j, int64_t value) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        fail(errc::invalid_argument, "matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") out of bounds " + std::to_string(rows_) + "x" +
                                         std::to_string(cols_));
    }
    if (value == 0) {
        entries_.erase({i, j});
    } else {
        entries_[{i, j}] = value;
    }
}

stat_matrix multiply(const stat_matrix& x, const stat_matrix& y) {
    if (x.cols() != y.rows()) {
        fail(errc::invalid_argument, "matrix dimension mismatch: " + std::to_string(x.cols()) +
                                         " cols vs " + std::to_string(y.rows()) + " rows");
    }
    stat_matrix out(x.rows(), y.cols());
    std::map<std::pair<int, int>, int64_t> acc;
    for (const auto& [xij, xv] : x.entries()) {
        const auto [i, k] = xij;
        // y's entries for row k form a contiguous range in the ordered map
        auto it = y.entries().lower_bound({k, 1});
        auto end = y.entries().lower_bound({k + 1, 1});
        for (; it != end; ++it) {
            acc[{i, it->first.second}] += xv * it->second;
        }
    }
    for (const auto& [ij, v] : acc) {
        if (v != 0) out.set(ij.first, ij.second, v);
    }
    return out;
}

stat_matrix pad_rows(const stat_matrix& m, int rows) {
    if (rows < m.rows()) fail(errc::invalid_argument, "pad_rows cannot shrink a matrix");
    stat_matrix out(rows, m.cols());
    for (const auto& [ij, v] : m.entries()) out.set(ij.first, ij.second, v);
    return out;
}

stat_matrix binomial(int n) {
    stat_matrix b(n, n);
    // Pascal rows; int64 is exact for every depth this library can reach.
    std::vector<int64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) b.set(i, j, row[static_cast<size_t>(j - 1)]);
        row.push_back(0);
        for (int j = static_cast<int>(row.size()) - 1; j > 0; --j) {
            row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
        }
    }
    return b;
}

stat_matrix binomial_inverse(int n) {
    stat_matrix b = binomial(n);
    stat_matrix out(n, n);
    for (const auto& [ij, v] : b.entries()) {
        const auto [i, j] = ij;
        out.set(i, j, ((i - j) % 2 == 0) ? v : -v);
    }
    return out;
}

namespace {

// a_i for i = 1..kmax: increasing subsequences counted by length via DP.
std::vector<uint64_t> increasing_counts(const permutation& p, int kmax) {
    const int n = p.size();
    std::vector<uint64_t> totals(static_cast<size_t>(kmax), 0);
    if (kmax >= 1) totals[0] = static_cast<uint64_t>(n);
    // ending[i][len-2] = subsequences of length `len` ending at position i
    std::vector<std::vector<uint64_t>> ending(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        ending[static_cast<size_t>(i)].assign(static_cast<size_t>(std::max(0, kmax - 1)), 0);
        for (int j = 0; j < i; ++j) {
            if (p[j] >= p[i]) continue;
            if (kmax >= 2) ending[static_cast<size_t>(i)][0] += 1;
            for (int len = 3; len <= kmax; ++len) {
                ending[static_cast<size_t>(i)][static_cast<size_t>(len - 2)] +=
                    ending[static_cast<size_t>(j)][static_cast<size_t>(len - 3)];
            }
        }
        for (int len = 2; len <= kmax; ++len) {
            totals[static_cast<size_t>(len - 1)] += ending[static_cast<size_t>(i)][static_cast<size_t>(len - 2)];
        }
    }
    return totals;
}

} // namespace

namespace detail {

std::vector<int64_t> weight_exponents_unchecked(const permutation& p, const stat_matrix& a,
                                                stat_family family) {
    std::vector<int64_t> out(static_cast<size_t>(a.cols() + 1), 0);
    out[0] = p.size();
    if (a.entries().empty() || p.empty()) return out;

    const int max_row = a.entries().rbegin()->first.first;
    std::vector<uint64_t> v; // v[i-1] = statistic driven by matrix row i
    if (family == stat_family::a) {
        v = increasing_counts(p, std::min(max_row, p.size()));
    } else {
        const int kmax = std::min(max_row + 1, p.size());
        if (kmax >= 2) {
            stat_vec sv = stat_fast(p, family, kmax);
            v.assign(sv.values.begin() + 1, sv.values.end()); // rows drive v_2..
        }
    }
    for (const auto& [ij, coeff] : a.entries()) {
        const auto [i, k] = ij;
        if (static_cast<size_t>(i) > v.size()) continue; // statistic is 0 beyond |p|
        out[static_cast<size_t>(k)] += coeff * static_cast<int64_t>(v[static_cast<size_t>(i - 1)]);
    }
    return out;
}

} // namespace detail

std::vector<int64_t> weight_exponents(const permutation& p, const stat_matrix& a, stat_family family) {
    static const generalized_pattern p132 = generalized_pattern::parse("1-3-2");
    if (!avoids(p, p132)) {
        fail(errc::invalid_argument, "weights are defined over 1-3-2-avoiding permutations only");
    }
    return detail::weight_exponents_unchecked(p, a, family);
}

} // namespace pavcf
