#include "core/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include <json.hpp>

namespace pavcf {

using ordered_json = nlohmann::ordered_json;

namespace {

bigint big_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    bigint acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i; // exact at every step along a Pascal row
    }
    return acc;
}

} // namespace

bigint catalan_number(int n) {
    if (n < 0) fail(errc::invalid_argument, "Catalan index must be nonnegative");
    return big_binom(2 * n, n) / (n + 1);
}

bigint narayana_number(int n, int k) {
    if (n < 0) fail(errc::invalid_argument, "Narayana index must be nonnegative");
    if (n == 0) {
        if (k != 0) fail(errc::invalid_argument, "Narayana k out of range for n=0");
        return 1;
    }
    if (k < 0 || k >= n) {
        fail(errc::invalid_argument, "Narayana k must satisfy 0 <= k < n");
    }
    return big_binom(n, k) * big_binom(n, k + 1) / n;
}

namespace {

// Resolves params against per-check defaults and records what was used, so
// reports always show effective values.
struct ck_ctx {
    verify_params p;
    std::vector<std::pair<std::string, std::string>> used;

    int n(int def) {
        const int v = p.n >= 0 ? p.n : def;
        used.emplace_back("n", std::to_string(v));
        return v;
    }
    int tdeg(int def) {
        const int v = p.tdeg >= 0 ? p.tdeg : def;
        used.emplace_back("tdeg", std::to_string(v));
        return v;
    }
    int trials(int def) {
        const int v = p.trials >= 0 ? p.trials : def;
        used.emplace_back("trials", std::to_string(v));
        return v;
    }
    uint64_t seed() {
        used.emplace_back("seed", std::to_string(p.seed));
        return p.seed;
    }
};

std::optional<counterexample> compare_series(const graded_series& a, const graded_series& b,
                                             const std::string& where) {
    if (a.vars() != b.vars()) {
        fail(errc::internal, "compared series disagree on variable count (" + where + ")");
    }
    const int top = std::min(a.trunc(), b.trunc());
    for (int d = 0; d <= top; ++d) {
        const auto& ta = a.at(d).terms();
        const auto& tb = b.at(d).terms();
        auto ia = ta.begin();
        auto ib = tb.begin();
        while (ia != ta.end() || ib != tb.end()) {
            if (ib == tb.end() || (ia != ta.end() && ia->first < ib->first)) {
                return counterexample{where, d, ia->first, ia->second.str(), "0"};
            }
            if (ia == ta.end() || ib->first < ia->first) {
                return counterexample{where, d, ib->first, "0", ib->second.str()};
            }
            if (ia->second != ib->second) {
                return counterexample{where, d, ia->first, ia->second.str(), ib->second.str()};
            }
            ++ia;
            ++ib;
        }
    }
    return std::nullopt;
}

// Uniform draws: dims in 1..5, entries in -2..2, row-major. Every integer
// matrix is admissible (the explicit q1 marker keeps all numerators
// gradable), so no draw is ever rejected.
stat_matrix draw_matrix(std::mt19937_64& rng) {
    const int r = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 5);
    stat_matrix m(r, k);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= k; ++j) {
            const int64_t v = static_cast<int64_t>(rng() % 5) - 2;
            if (v != 0) m.set(i, j, v);
        }
    }
    return m;
}

// ---- check runners -------------------------------------------------------

std::optional<counterexample> run_identity_gf_vs_cf(ck_ctx& c, stat_family fam, cf_family cf,
                                                    int default_tdeg) {
    const int n = c.tdeg(default_tdeg);
    const stat_matrix a = stat_matrix::identity(4);
    const graded_series lhs = enumerate_gf(fam, a, n);
    const graded_series rhs = stable_expand(cf, a, n);
    return compare_series(lhs, rhs, std::string("enumeration(") + static_cast<char>(fam) +
                                        ",I4) vs cfrac(" + static_cast<char>(cf) + ",B*I4)");
}

std::optional<counterexample> check_bcs1(ck_ctx& c) {
    return run_identity_gf_vs_cf(c, stat_family::a, cf_family::C, 8);
}
std::optional<counterexample> check_cc(ck_ctx& c) {
    return run_identity_gf_vs_cf(c, stat_family::e, cf_family::D, 9);
}
std::optional<counterexample> check_dd(ck_ctx& c) {
    return run_identity_gf_vs_cf(c, stat_family::f, cf_family::E, 9);
}

std::optional<counterexample> check_bcs2(ck_ctx& c) {
    const int n = c.tdeg(8);
    const int trials = c.trials(20);
    std::mt19937_64 rng(c.seed());
    for (int t = 1; t <= trials; ++t) {
        const stat_matrix a = draw_matrix(rng);
        const graded_series lhs = enumerate_gf(stat_family::a, a, n);
        const graded_series rhs = stable_expand(cf_family::C, a, n);
        if (auto ce = compare_series(lhs, rhs, "trial " + std::to_string(t) + ": F_A vs C_{BA}")) {
            return ce;
        }
    }
    return std::nullopt;
}

std::optional<counterexample> check_mm_forward(ck_ctx& c) {
    const int n = c.tdeg(7);
    const int trials = c.trials(20);
    std::mt19937_64 rng(c.seed());
    for (int t = 1; t <= trials; ++t) {
        const stat_matrix a = draw_matrix(rng);
        const graded_series ge = enumerate_gf(stat_family::e, a, n);
        const graded_series de = stable_expand(cf_family::D, a, n);
        if (auto ce = compare_series(ge, de, "trial " + std::to_string(t) + ": G_A vs D_{BA}")) {
            return ce;
        }
        const graded_series hf = enumerate_gf(stat_family::f, a, n);
        const graded_series ef = stable_expand(cf_family::E, a, n);
        if (auto ce = compare_series(hf, ef, "trial " + std::to_string(t) + ": H_A vs E_{BA}")) {
            return ce;
        }
    }
    return std::nullopt;
}

std::optional<counterexample> check_mm_inverse(ck_ctx& c) {
    const int n = c.tdeg(7);
    const int trials = c.trials(20);
    std::mt19937_64 rng(c.seed());
    for (int t = 1; t <= trials; ++t) {
        const stat_matrix a = draw_matrix(rng);
        // Continued fractions of A itself: levels are rows of A, zero rows
        // below (A has finite support, so this is exact at every depth).
        auto raw_levels = [&a](int depth) { return pad_rows(a, std::max(depth, a.rows())); };
        // Statistic rows beyond the length bound weigh statistics that
        // vanish on every enumerated host, so this materialization is exact.
        const int r = std::max({n, a.rows(), 1});
        const stat_matrix binv_a = multiply(binomial_inverse(r), pad_rows(a, r));

        const graded_series da = expand_cf_stable(cf_family::D, raw_levels, n);
        const graded_series g_inv = enumerate_gf(stat_family::e, binv_a, n);
        if (auto ce = compare_series(da, g_inv, "trial " + std::to_string(t) + ": D_A vs G_{B^-1 A}")) {
            return ce;
        }
        const graded_series ea = expand_cf_stable(cf_family::E, raw_levels, n);
        const graded_series h_inv = enumerate_gf(stat_family::f, binv_a, n);
        if (auto ce = compare_series(ea, h_inv, "trial " + std::to_string(t) + ": E_A vs H_{B^-1 A}")) {
            return ce;
        }
    }
    return std::nullopt;
}

std::optional<counterexample> run_narayana_hist(ck_ctx& c, const char* spec) {
    const int nmax = c.n(10);
    for (int n = 1; n <= nmax; ++n) {
        const auto hist = distribution(spec, n);
        for (int k = 0; k < n; ++k) {
            const bigint expected = narayana_number(n, k);
            auto it = hist.find(static_cast<uint64_t>(k));
            const bigint actual = it == hist.end() ? 0 : bigint(it->second);
            if (actual != expected) {
                return counterexample{"n=" + std::to_string(n) + " k=" + std::to_string(k), -1, {},
                                      actual.str(), expected.str()};
            }
        }
        for (const auto& [k, cnt] : hist) {
            if (k >= static_cast<uint64_t>(n)) {
                return counterexample{"n=" + std::to_string(n) + " k=" + std::to_string(k), -1, {},
                                      std::to_string(cnt), "0"};
            }
        }
    }
    return std::nullopt;
}

std::optional<counterexample> check_narayana_e(ck_ctx& c) { return run_narayana_hist(c, "e2"); }
std::optional<counterexample> check_narayana_f(ck_ctx& c) { return run_narayana_hist(c, "f2"); }

std::optional<counterexample> check_narayana_funceq(ck_ctx& c) {
    const int n = c.tdeg(10);
    stat_matrix a(1, 1);
    a.set(1, 1, 1);
    const graded_series s = stable_expand(cf_family::D, a, n);
    const graded_series one = graded_series::one(1, n);
    const exp_vec x{1};
    const exp_vec no_x{0};
    // N = 1 + xt N^2 - xt N + t N, with t the grading variable and x = q2
    const graded_series rhs =
        one + mul_monomial(s * s, 1, x) - mul_monomial(s, 1, x) + mul_monomial(s, 1, no_x);
    return compare_series(s, rhs, "Narayana functional equation");
}

std::optional<counterexample> run_incr2(ck_ctx& c, const char* spec, cf_family cf) {
    const int n = c.tdeg(9);
    graded_series lhs(1, n);
    for (int len = 0; len <= n; ++len) {
        for (const auto& [value, count] : distribution(spec, len)) {
            lhs.add_term(len, exp_vec{static_cast<int64_t>(value)}, count);
        }
    }
    // All-ones first column; under the binomial transform the level-n
    // exponent becomes 2^(n-1). Rows beyond n+1 cannot reach grades <= n.
    stat_matrix ones(n + 2, 1);
    for (int i = 1; i <= n + 2; ++i) ones.set(i, 1, 1);
    const graded_series rhs = stable_expand(cf, ones, n);
    return compare_series(lhs, rhs, std::string("aggregate ") + spec + " histogram vs cfrac");
}

std::optional<counterexample> check_incr2_e(ck_ctx& c) {
    return run_incr2(c, "e*", cf_family::D);
}
std::optional<counterexample> check_incr2_f(ck_ctx& c) {
    return run_incr2(c, "f*", cf_family::E);
}

graded_series catalan_series(int n) {
    graded_series expected(1, n);
    for (int d = 0; d <= n; ++d) expected.add_term(d, exp_vec{0}, catalan_number(d));
    return expected;
}

std::optional<counterexample> check_catalan_c1(ck_ctx& c) {
    const int n = c.tdeg(10);
    const graded_series s = stable_expand(cf_family::C, stat_matrix::zero(1, 1), n);
    return compare_series(s, catalan_series(n), "zero-matrix C-family vs Catalan closed form");
}

std::optional<counterexample> check_catalan_c2(ck_ctx& c) {
    const int n = c.tdeg(10);
    const graded_series se = stable_expand(cf_family::E, stat_matrix::zero(1, 1), n);
    if (auto ce = compare_series(se, catalan_series(n), "zero-matrix E-family vs Catalan closed form")) {
        return ce;
    }
    const graded_series sc = stable_expand(cf_family::C, stat_matrix::zero(1, 1), n);
    return compare_series(se, sc, "zero-matrix E-family vs C-family");
}

std::optional<counterexample> check_fastpath(ck_ctx& c) {
    const int nmax = c.n(9);
    std::optional<counterexample> found;
    for (int n = 0; n <= nmax && !found; ++n) {
        const int kmax = std::max(1, n);
        for_each_avoider_132(n, [&](const std::vector<int>& word) {
            if (found) return;
            const permutation p = permutation::from_word(word);
            for (stat_family fam : {stat_family::e, stat_family::f}) {
                const stat_vec fast = stat_fast(p, fam, kmax);
                const stat_vec slow = stat_vector(p, fam, kmax);
                if (fast != slow) {
                    for (int k = 1; k <= kmax; ++k) {
                        if (fast.at(k) != slow.at(k)) {
                            found = counterexample{
                                "permutation " + p.str() + " family " + static_cast<char>(fam) +
                                    std::string(" k=") + std::to_string(k),
                                -1,
                                {},
                                std::to_string(fast.at(k)),
                                std::to_string(slow.at(k))};
                            return;
                        }
                    }
                }
            }
        });
    }
    return found;
}

// The boundary indicator of the pair recursion with the orientation flipped
// (gains the pair when the block is EMPTY); used only to pin down that this
// reading is wrong.
uint64_t flipped_pair_recursion(const std::vector<int>& word, int begin, int end, bool family_e) {
    if (begin == end) return 0;
    int max_pos = begin;
    for (int i = begin + 1; i < end; ++i) {
        if (word[static_cast<size_t>(i)] > word[static_cast<size_t>(max_pos)]) max_pos = i;
    }
    const bool left_empty = max_pos == begin;
    const bool right_empty = max_pos + 1 == end;
    const uint64_t gains = (family_e ? left_empty : right_empty) ? 1 : 0;
    return flipped_pair_recursion(word, begin, max_pos, family_e) +
           flipped_pair_recursion(word, max_pos + 1, end, family_e) + gains;
}

std::optional<counterexample> check_recursion_delta(ck_ctx& c) {
    (void)c;
    // Corrected orientation must reproduce the matcher on every length-3
    // avoider; the flipped orientation must fail on the named witnesses.
    for (const permutation& p : enumerate_avoiders_132(3)) {
        for (stat_family fam : {stat_family::e, stat_family::f}) {
            const uint64_t matcher = stat(p, fam, 2);
            const uint64_t corrected = stat_fast(p, fam, 2).at(2);
            if (matcher != corrected) {
                return counterexample{"corrected recursion on " + p.str() + " family " +
                                          std::string(1, static_cast<char>(fam)),
                                      -1,
                                      {},
                                      std::to_string(corrected),
                                      std::to_string(matcher)};
            }
        }
    }
    const permutation we = permutation::parse("231");
    const uint64_t flipped_e = flipped_pair_recursion(we.word(), 0, we.size(), true);
    if (flipped_e == stat(we, stat_family::e, 2)) {
        return counterexample{"flipped indicator unexpectedly matches e_2 on witness 231",
                              -1,
                              {},
                              std::to_string(flipped_e),
                              std::to_string(stat(we, stat_family::e, 2))};
    }
    const permutation wf = permutation::parse("321");
    const uint64_t flipped_f = flipped_pair_recursion(wf.word(), 0, wf.size(), false);
    if (flipped_f == stat(wf, stat_family::f, 2)) {
        return counterexample{"flipped indicator unexpectedly matches f_2 on witness 321",
                              -1,
                              {},
                              std::to_string(flipped_f),
                              std::to_string(stat(wf, stat_family::f, 2))};
    }
    return std::nullopt;
}

struct check_def {
    const char* id;
    std::optional<counterexample> (*fn)(ck_ctx&);
};

const check_def k_checks[] = {
    {"bcs1", check_bcs1},
    {"cc", check_cc},
    {"dd", check_dd},
    {"bcs2", check_bcs2},
    {"mm-forward", check_mm_forward},
    {"mm-inverse", check_mm_inverse},
    {"narayana-e", check_narayana_e},
    {"narayana-f", check_narayana_f},
    {"narayana-funceq", check_narayana_funceq},
    {"incr2-e", check_incr2_e},
    {"incr2-f", check_incr2_f},
    {"catalan-c1", check_catalan_c1},
    {"catalan-c2", check_catalan_c2},
    {"fastpath", check_fastpath},
    {"recursion-delta", check_recursion_delta},
};

ordered_json report_to_ojson(const report& r) {
    ordered_json doc;
    doc["check"] = r.check;
    doc["pass"] = r.pass;
    doc["params"] = ordered_json::object();
    for (const auto& [k, v] : r.params) doc["params"][k] = v;
    if (r.counter) {
        ordered_json ce;
        ce["detail"] = r.counter->detail;
        if (r.counter->grade >= 0) {
            ce["grade"] = r.counter->grade;
            ce["monomial"] = r.counter->monomial;
        }
        ce["lhs"] = r.counter->lhs;
        ce["rhs"] = r.counter->rhs;
        doc["counterexample"] = std::move(ce);
    } else {
        doc["counterexample"] = nullptr;
    }
    return doc;
}

} // namespace

std::string report::to_text() const {
    std::string line = pass ? "[PASS] " : "[FAIL] ";
    line += check;
    if (!params.empty()) {
        line += " (";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) line += ' ';
            line += params[i].first + "=" + params[i].second;
        }
        line += ")";
    }
    if (counter) {
        line += "  counterexample: " + counter->detail;
        if (counter->grade >= 0) {
            line += " grade=" + std::to_string(counter->grade) + " monomial=[";
            for (size_t i = 0; i < counter->monomial.size(); ++i) {
                if (i) line += ',';
                line += std::to_string(counter->monomial[i]);
            }
            line += "]";
        }
        line += " lhs=" + counter->lhs + " rhs=" + counter->rhs;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", elapsed_ms);
    line += "  ";
    line += buf;
    line += " ms";
    return line;
}

std::string report::to_json() const { return report_to_ojson(*this).dump(); }

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& c : k_checks) v.emplace_back(c.id);
        return v;
    }();
    return ids;
}

report run_check(std::string_view id, const verify_params& params) {
    for (const auto& def : k_checks) {
        if (id == def.id) {
            ck_ctx ctx{params, {}};
            const auto t0 = std::chrono::steady_clock::now();
            std::optional<counterexample> ce = def.fn(ctx);
            const auto t1 = std::chrono::steady_clock::now();
            report r;
            r.check = def.id;
            r.pass = !ce.has_value();
            r.params = std::move(ctx.used);
            r.counter = std::move(ce);
            r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            return r;
        }
    }
    fail(errc::invalid_argument, "unknown check id '" + std::string(id) + "'");
}

std::vector<report> run_all(const verify_params& params) {
    std::vector<report> out;
    for (const auto& id : check_ids()) out.push_back(run_check(id, params));
    return out;
}

std::string reports_to_text(const std::vector<report>& reports) {
    std::string out;
    int passed = 0;
    for (const auto& r : reports) {
        out += r.to_text();
        out += '\n';
        passed += r.pass ? 1 : 0;
    }
    out += std::to_string(passed) + "/" + std::to_string(reports.size()) + " checks passed\n";
    return out;
}

std::string reports_to_json(const std::vector<report>& reports) {
    ordered_json doc = ordered_json::array();
    for (const auto& r : reports) doc.push_back(report_to_ojson(r));
    return doc.dump();
}

} // namespace pavcf
