#pragma once

#include "core/laurent.hpp"

namespace pavcf {

/// Formal series truncated by the exponent of the grading variable q1.
/// Coefficient d is a Laurent polynomial in q2..qm holding every monomial
/// whose q1-exponent is exactly d; q1 itself never appears inside a
/// coefficient, and its exponent is nonnegative by construction.
class graded_series {
public:
    graded_series(int vars, int trunc);

    static graded_series one(int vars, int trunc);
    /// c * q1^grade * q2^e[0] * ... ; grade must lie in [0, trunc].
    static graded_series monomial(int vars, int trunc, int grade, exp_vec e, bigint c);

    int vars() const noexcept { return vars_; }
    int trunc() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const laurent_poly& at(int grade) const;
    void add_term(int grade, exp_vec e, bigint c);

    bigint coeff(int grade, const exp_vec& e) const { return at(grade).coeff(e); }

    friend bool operator==(const graded_series&, const graded_series&) = default;

    friend graded_series operator+(const graded_series& a, const graded_series& b);
    friend graded_series operator-(const graded_series& a, const graded_series& b);
    friend graded_series operator*(const graded_series& a, const graded_series& b);

private:
    int vars_;
    std::vector<laurent_poly> coeffs_; // index = q1-grade, size trunc+1
};

/// Multiplicative inverse up to the truncation order, by the geometric
/// recurrence; requires the grade-0 coefficient to be the constant +1 or -1.
graded_series series_invert(const graded_series& s);

/// s shifted up by q1^grade_shift and multiplied by the monomial with
/// exponents e (grades pushed past the truncation are discarded).
graded_series mul_monomial(const graded_series& s, int grade_shift, const exp_vec& e);

} // namespace pavcf
