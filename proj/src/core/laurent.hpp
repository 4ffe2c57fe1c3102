#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/error.hpp"

namespace pavcf {

using bigint = boost::multiprecision::cpp_int;

/// Exponents of the non-grading variables q2..qm; may be negative.
using exp_vec = std::vector<int64_t>;

/// Sparse Laurent polynomial in q2..qm with exact integer coefficients.
/// Terms live in an ordered map keyed by exponent vector, so the
/// representation is canonical and equality is structural.
class laurent_poly {
public:
    explicit laurent_poly(int vars) : vars_(vars) {
        if (vars < 0) fail(errc::invalid_argument, "variable count must be nonnegative");
    }

    static laurent_poly constant(int vars, bigint c) {
        laurent_poly p(vars);
        p.add_term(exp_vec(static_cast<size_t>(vars), 0), std::move(c));
        return p;
    }
    static laurent_poly monomial(int vars, exp_vec e, bigint c) {
        laurent_poly p(vars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int vars() const noexcept { return vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    size_t term_count() const noexcept { return terms_.size(); }

    /// True for the constant +1 or -1 (invertible leading coefficients).
    bool is_unit_constant() const {
        if (terms_.size() != 1) return false;
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1) return false;
        for (int64_t x : e) {
            if (x != 0) return false;
        }
        return true;
    }

    bigint coeff(const exp_vec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? bigint(0) : it->second;
    }

    void add_term(exp_vec e, bigint c) {
        if (static_cast<int>(e.size()) != vars_) {
            fail(errc::invalid_argument, "exponent vector length does not match variable count");
        }
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<exp_vec, bigint>& terms() const noexcept { return terms_; }

    friend bool operator==(const laurent_poly&, const laurent_poly&) = default;

    laurent_poly& operator+=(const laurent_poly& o);
    laurent_poly& operator-=(const laurent_poly& o);
    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }
    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b);
    laurent_poly operator-() const;

private:
    int vars_;
    std::map<exp_vec, bigint> terms_;
};

} // namespace pavcf
