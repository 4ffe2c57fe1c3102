#include "core/series.hpp"

#include <algorithm>

namespace pavcf {

namespace {

void check_compatible(const graded_series& a, const graded_series& b) {
    if (a.vars() != b.vars()) {
        fail(errc::invalid_argument, "series variable count mismatch: " + std::to_string(a.vars()) +
                                         " vs " + std::to_string(b.vars()));
    }
}

} // namespace

graded_series::graded_series(int vars, int trunc) : vars_(vars) {
    if (trunc < 0) fail(errc::invalid_argument, "truncation order must be nonnegative");
    coeffs_.assign(static_cast<size_t>(trunc) + 1, laurent_poly(vars));
}

graded_series graded_series::one(int vars, int trunc) {
    graded_series s(vars, trunc);
    s.coeffs_[0] = laurent_poly::constant(vars, 1);
    return s;
}

graded_series graded_series::monomial(int vars, int trunc, int grade, exp_vec e, bigint c) {
    graded_series s(vars, trunc);
    s.add_term(grade, std::move(e), std::move(c));
    return s;
}

const laurent_poly& graded_series::at(int grade) const {
    if (grade < 0 || grade > trunc()) {
        fail(errc::invalid_argument, "grade " + std::to_string(grade) + " outside truncation 0.." +
                                         std::to_string(trunc()));
    }
    return coeffs_[static_cast<size_t>(grade)];
}

void graded_series::add_term(int grade, exp_vec e, bigint c) {
    if (grade < 0 || grade > trunc()) {
        fail(errc::invalid_argument, "grade " + std::to_string(grade) + " outside truncation 0.." +
                                         std::to_string(trunc()));
    }
    coeffs_[static_cast<size_t>(grade)].add_term(std::move(e), std::move(c));
}

graded_series operator+(const graded_series& a, const graded_series& b) {
    check_compatible(a, b);
    graded_series out(a.vars(), std::min(a.trunc(), b.trunc()));
    for (int d = 0; d <= out.trunc(); ++d) {
        out.coeffs_[static_cast<size_t>(d)] =
            a.coeffs_[static_cast<size_t>(d)] + b.coeffs_[static_cast<size_t>(d)];
    }
    return out;
}

graded_series operator-(const graded_series& a, const graded_series& b) {
    check_compatible(a, b);
    graded_series out(a.vars(), std::min(a.trunc(), b.trunc()));
    for (int d = 0; d <= out.trunc(); ++d) {
        out.coeffs_[static_cast<size_t>(d)] =
            a.coeffs_[static_cast<size_t>(d)] - b.coeffs_[static_cast<size_t>(d)];
    }
    return out;
}

graded_series operator*(const graded_series& a, const graded_series& b) {
    check_compatible(a, b);
    graded_series out(a.vars(), std::min(a.trunc(), b.trunc()));
    for (int d = 0; d <= out.trunc(); ++d) {
        auto& acc = out.coeffs_[static_cast<size_t>(d)];
        for (int i = 0; i <= d; ++i) {
            const auto& ai = a.coeffs_[static_cast<size_t>(i)];
            const auto& bj = b.coeffs_[static_cast<size_t>(d - i)];
            if (ai.is_zero() || bj.is_zero()) continue;
            acc += ai * bj;
        }
    }
    return out;
}

graded_series series_invert(const graded_series& s) {
    if (!s.at(0).is_unit_constant()) {
        fail(errc::invalid_argument, "non-invertible leading coefficient (grade-0 term must be +1 or -1)");
    }
    const bigint lead = s.at(0).coeff(exp_vec(static_cast<size_t>(s.vars()), 0));
    graded_series out(s.vars(), s.trunc());
    out.add_term(0, exp_vec(static_cast<size_t>(s.vars()), 0), lead);
    // s*out = 1 gradewise: out_d = -lead * sum_{i>=1} s_i * out_{d-i}
    for (int d = 1; d <= s.trunc(); ++d) {
        laurent_poly acc(s.vars());
        for (int i = 1; i <= d; ++i) {
            const auto& si = s.at(i);
            const auto& oj = out.at(d - i);
            if (si.is_zero() || oj.is_zero()) continue;
            acc += si * oj;
        }
        if (!acc.is_zero()) {
            for (const auto& [e, c] : acc.terms()) out.add_term(d, e, -lead * c);
        }
    }
    return out;
}

graded_series mul_monomial(const graded_series& s, int grade_shift, const exp_vec& e) {
    if (grade_shift < 0) fail(errc::invalid_argument, "grade shift must be nonnegative");
    if (static_cast<int>(e.size()) != s.vars()) {
        fail(errc::invalid_argument, "monomial exponent length does not match series variables");
    }
    graded_series out(s.vars(), s.trunc());
    for (int d = grade_shift; d <= s.trunc(); ++d) {
        const auto& src = s.at(d - grade_shift);
        for (const auto& [se, c] : src.terms()) {
            exp_vec ne(se);
            for (size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
            out.add_term(d, std::move(ne), c);
        }
    }
    return out;
}

} // namespace pavcf
