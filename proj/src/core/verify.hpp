#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/cfrac.hpp"
#include "core/gf_oracle.hpp"

namespace pavcf {

/// Catalan number C(2n,n)/(n+1); the size of S_n(1-3-2).
bigint catalan_number(int n);

/// Narayana number C(n,k)*C(n,k+1)/n for 0 <= k < n, with N(0,0) = 1.
/// Counts S_n(1-3-2) by adjacent ascents (equivalently by adjacent descents).
bigint narayana_number(int n, int k);

/// Knobs for a verification run. Negative fields mean "use the check's
/// default"; the seed feeds the random-matrix batteries.
struct verify_params {
    int n = -1;
    int tdeg = -1;
    int trials = -1;
    uint64_t seed = 42;
};

struct counterexample {
    std::string detail; // where: trial, host permutation, or table cell
    int grade = -1;     // q1-grade for series mismatches, -1 otherwise
    exp_vec monomial;   // exponents of the offending monomial (empty if n/a)
    std::string lhs;
    std::string rhs;
};

struct report {
    std::string check;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> params; // resolved, in canonical order
    std::optional<counterexample> counter;
    double elapsed_ms = 0.0; // informational; kept out of the canonical JSON

    std::string to_text() const;
    std::string to_json() const; // canonical: byte-identical given identical seeds
};

/// Check ids, in canonical reporting order:
///   bcs1            enumeration GF of a_k vs C-family expansion (identity matrix)
///   cc              enumeration GF of e_k vs D-family expansion (identity matrix)
///   dd              enumeration GF of f_k vs E-family expansion (identity matrix)
///   bcs2            random matrices: F_A vs C_{BA}
///   mm-forward      random matrices: G_A vs D_{BA} and H_A vs E_{BA}
///   mm-inverse      random matrices: D_A vs G_{B^-1 A} and E_A vs H_{B^-1 A}
///   narayana-e      e_2 histogram vs Narayana closed form
///   narayana-f      f_2 histogram vs Narayana closed form
///   narayana-funceq D-family ascent series satisfies N = 1 + xtN^2 - xtN + tN
///   incr2-e         aggregate e-total histogram vs the 2^(n-1)-exponent cfrac
///   incr2-f         aggregate f-total histogram vs its dual cfrac
///   catalan-c1      zero-matrix C-family expansion vs Catalan closed form
///   catalan-c2      zero-matrix E-family expansion vs Catalan closed form and vs c1
///   fastpath        recursion statistics vs generic matcher on all avoiders
///   recursion-delta corrected boundary indicator holds; the flipped one fails
const std::vector<std::string>& check_ids();

report run_check(std::string_view id, const verify_params& params = {});
std::vector<report> run_all(const verify_params& params = {});

std::string reports_to_text(const std::vector<report>& reports);
std::string reports_to_json(const std::vector<report>& reports);

} // namespace pavcf
