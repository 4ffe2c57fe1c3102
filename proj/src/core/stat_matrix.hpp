#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "core/permutation.hpp"
#include "core/statistics.hpp"

namespace pavcf {

/// Finite truncation of an integer matrix with sparse storage. Indices are
/// 1-based; entries outside the stored set read as 0, and zero values are
/// never stored.
class stat_matrix {
public:
    stat_matrix(int rows, int cols);

    static stat_matrix identity(int n);
    static stat_matrix zero(int rows, int cols) { return stat_matrix(rows, cols); }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int64_t at(int i, int j) const;
    void set(int i, int j, int64_t value); // value 0 erases

    const std::map<std::pair<int, int>, int64_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const stat_matrix&, const stat_matrix&) = default;

private:
    int rows_;
    int cols_;
    std::map<std::pair<int, int>, int64_t> entries_;
};

/// Standard matrix product; requires x.cols == y.rows.
stat_matrix multiply(const stat_matrix& x, const stat_matrix& y);

/// Same matrix with the row count raised to `rows` (missing rows are zero).
stat_matrix pad_rows(const stat_matrix& m, int rows);

/// Lower-triangular binomial matrix, B(i,j) = C(i-1, j-1), and its exact
/// inverse (-1)^(i-j) C(i-1, j-1). B transports statistic matrices to
/// continued-fraction matrices and back.
stat_matrix binomial(int n);
stat_matrix binomial_inverse(int n);

/// Exponent vector of the weight monomial of `p` with respect to `a`.
/// Component 0 is the exponent of the grading variable q1 and always equals
/// |p|. Component k (1 <= k <= cols) is the exponent of q_{k+1}:
///   family a:    sum_i a(i,k) * a_i(p)      (row i drives a_i)
///   family e/f:  sum_i a(i,k) * v_{i+1}(p)  (row i drives e_{i+1} / f_{i+1})
/// Requires p to avoid 1-3-2.
std::vector<int64_t> weight_exponents(const permutation& p, const stat_matrix& a, stat_family family);

namespace detail {
/// Same, skipping the avoidance re-validation; for enumeration loops whose
/// hosts are avoiders by construction.
std::vector<int64_t> weight_exponents_unchecked(const permutation& p, const stat_matrix& a,
                                                stat_family family);
} // namespace detail

} // namespace pavcf
