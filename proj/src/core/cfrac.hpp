#pragma once

#include <functional>

#include "core/series.hpp"
#include "core/stat_matrix.hpp"

namespace pavcf {

/// The three continued-fraction shapes expanded by this library. Writing
/// d_n = q1 * prod_k q_{k+1}^{M(n,k)} for the level-n numerator monomial
/// (row n of the matrix, with an explicit q1 marker so every numerator has
/// q1-degree exactly 1), the level-n block of each family is
///   C:  1 / (1 - d_n * next)
///   D:  1 / (1 - q1 + d_n - d_n * next)
///   E:  1 - q1 / (d_n - 1/next)
/// finishing with next = 1 below the deepest level.
enum class cf_family : char { C = 'C', D = 'D', E = 'E' };

struct cf_spec {
    cf_family family;
    int depth;
    int vars; // non-grading variables q2..q_{vars+1}
    std::vector<exp_vec> levels; // levels[n-1] = exponents of d_n over q2..qm
};

/// Reads the level monomials off rows 1..depth of `m` (cols <= vars; missing
/// columns read as exponent 0). Rows beyond m.rows() would silently read as
/// zero, so they are rejected instead.
cf_spec build_cf(cf_family family, const stat_matrix& m, int depth, int vars);

/// Bottom-up evaluation at truncation order `trunc` with terminator 1.
graded_series evaluate_cf(const cf_spec& spec, int trunc);

/// Depth at which expansion of grades <= trunc is expected to have converged.
int default_depth(cf_family family, int trunc);

/// Expands the continued fraction whose level matrix is produced on demand by
/// `materialize(depth)` (rows 1..depth). Evaluates at the default depth and
/// again two levels deeper; escalates while the two expansions disagree on
/// any grade <= trunc, and reports depth instability if agreement is never
/// reached. No binomial transform is applied.
graded_series expand_cf_stable(cf_family family,
                               const std::function<stat_matrix(int)>& materialize, int trunc);

/// The statistic-matrix entry point: zero-extends `a` to the working depth,
/// applies the binomial transform B, and expands with the stability check.
/// This is the continued-fraction counterpart of enumerate_gf for the same
/// matrix.
graded_series stable_expand(cf_family family, const stat_matrix& a, int trunc);

/// Fixed-depth variant of stable_expand (no stability re-check); depth >= 1.
graded_series expand_at_depth(cf_family family, const stat_matrix& a, int trunc, int depth);

} // namespace pavcf
