// Acceptance suite: runs the project's exit criteria end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core/cfrac.hpp"
#include "core/gf_oracle.hpp"
#include "core/verify.hpp"

using namespace pavcf;

namespace {

struct criterion {
    std::string name;
    double budget_seconds; // 0 = untimed
    std::function<std::optional<std::string>()> run; // failure message or nullopt
};

std::optional<std::string> expect_report(const report& r) {
    if (r.pass) return std::nullopt;
    return r.check + " failed: " + (r.counter ? r.counter->detail + " lhs=" + r.counter->lhs +
                                                    " rhs=" + r.counter->rhs
                                              : std::string("no counterexample attached"));
}

std::optional<std::string> criterion_catalan_counts() {
    const uint64_t expected[] = {1,   1,    2,    5,     14,    42,    132,
                                 429, 1430, 4862, 16796, 58786, 208012};
    for (int n = 0; n <= 12; ++n) {
        uint64_t count = 0;
        for_each_avoider_132(n, [&](const std::vector<int>&) { ++count; });
        if (count != expected[n]) {
            return "|S_" + std::to_string(n) + "(132)| = " + std::to_string(count) +
                   ", expected " + std::to_string(expected[n]);
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_worked_example() {
    const auto host = permutation::parse("35421");
    const uint64_t glued = count_occurrences(generalized_pattern::parse("23-1"), host);
    const uint64_t classical = count_occurrences(generalized_pattern::parse("2-3-1"), host);
    if (glued != 2) return "count(23-1, 35421) = " + std::to_string(glued) + ", expected 2";
    if (classical != 4) return "count(2-3-1, 35421) = " + std::to_string(classical) + ", expected 4";
    return std::nullopt;
}

std::optional<std::string> run_single(const char* id, verify_params p) {
    return expect_report(run_check(id, p));
}

std::optional<std::string> criterion_random_batteries() {
    verify_params p;
    p.tdeg = 7;
    p.trials = 20;
    p.seed = 42;
    for (const char* id : {"bcs2", "mm-forward", "mm-inverse"}) {
        if (auto failure = run_single(id, p)) return failure;
    }
    return std::nullopt;
}

std::optional<std::string> criterion_narayana() {
    verify_params hist;
    hist.n = 10;
    for (const char* id : {"narayana-e", "narayana-f"}) {
        if (auto failure = run_single(id, hist)) return failure;
    }
    verify_params eq;
    eq.tdeg = 10;
    return run_single("narayana-funceq", eq);
}

std::optional<std::string> criterion_increasing() {
    verify_params p;
    p.tdeg = 9;
    for (const char* id : {"incr2-e", "incr2-f"}) {
        if (auto failure = run_single(id, p)) return failure;
    }
    return std::nullopt;
}

std::optional<std::string> criterion_catalan_cf() {
    verify_params p;
    p.tdeg = 10;
    for (const char* id : {"catalan-c1", "catalan-c2"}) {
        if (auto failure = run_single(id, p)) return failure;
    }
    return std::nullopt;
}

std::optional<std::string> criterion_recursions() {
    verify_params p;
    p.n = 9;
    for (const char* id : {"fastpath", "recursion-delta"}) {
        if (auto failure = run_single(id, p)) return failure;
    }
    return std::nullopt;
}

std::optional<std::string> criterion_depth_stability() {
    struct config {
        cf_family family;
        stat_matrix matrix;
        int tdeg;
    };
    stat_matrix ascent(1, 1);
    ascent.set(1, 1, 1);
    stat_matrix ones(11, 1);
    for (int i = 1; i <= 11; ++i) ones.set(i, 1, 1);
    std::vector<config> configs;
    configs.push_back({cf_family::C, stat_matrix::identity(4), 8});
    configs.push_back({cf_family::D, stat_matrix::identity(4), 9});
    configs.push_back({cf_family::E, stat_matrix::identity(4), 9});
    configs.push_back({cf_family::D, ascent, 10});
    configs.push_back({cf_family::D, ones, 9});
    configs.push_back({cf_family::E, ones, 9});
    configs.push_back({cf_family::C, stat_matrix::zero(1, 1), 10});
    configs.push_back({cf_family::E, stat_matrix::zero(1, 1), 10});
    std::mt19937_64 rng(42);
    for (int t = 0; t < 3; ++t) {
        stat_matrix a(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5));
        for (int i = 1; i <= a.rows(); ++i) {
            for (int j = 1; j <= a.cols(); ++j) {
                a.set(i, j, static_cast<int64_t>(rng() % 5) - 2);
            }
        }
        for (cf_family fam : {cf_family::C, cf_family::D, cf_family::E}) {
            configs.push_back({fam, a, 7});
        }
    }

    for (const auto& cfg : configs) {
        const int d0 = default_depth(cfg.family, cfg.tdeg);
        const auto shallow = expand_at_depth(cfg.family, cfg.matrix, cfg.tdeg, d0);
        const auto deep = expand_at_depth(cfg.family, cfg.matrix, cfg.tdeg, d0 + 2);
        if (!(shallow == deep)) {
            return std::string("transformed expansion family ") +
                   static_cast<char>(cfg.family) + " tdeg " + std::to_string(cfg.tdeg) +
                   " changed between depths " + std::to_string(d0) + " and " +
                   std::to_string(d0 + 2);
        }
        // untransformed expansion (continued fraction of the matrix itself)
        auto raw = [&](int depth) {
            const auto m = pad_rows(cfg.matrix, std::max(depth, cfg.matrix.rows()));
            return evaluate_cf(build_cf(cfg.family, m, depth, m.cols()), cfg.tdeg);
        };
        if (!(raw(d0) == raw(d0 + 2))) {
            return std::string("raw expansion family ") + static_cast<char>(cfg.family) +
                   " tdeg " + std::to_string(cfg.tdeg) + " changed between depths " +
                   std::to_string(d0) + " and " + std::to_string(d0 + 2);
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_kernel() {
    for (int r = 1; r <= 12; ++r) {
        if (!(multiply(binomial(r), binomial_inverse(r)) == stat_matrix::identity(r))) {
            return "B * B^-1 != I at size " + std::to_string(r);
        }
    }
    std::mt19937_64 rng(4242);
    auto random_series = [&](int vars, int trunc, bool unit_lead) {
        graded_series s(vars, trunc);
        if (unit_lead) s.add_term(0, exp_vec(static_cast<size_t>(vars), 0), (rng() % 2) ? 1 : -1);
        const int terms = 3 + static_cast<int>(rng() % 8);
        for (int t = 0; t < terms; ++t) {
            const int grade = static_cast<int>(rng() % (static_cast<uint64_t>(trunc) + 1));
            if (unit_lead && grade == 0) continue;
            exp_vec e(static_cast<size_t>(vars));
            for (auto& x : e) x = static_cast<int64_t>(rng() % 7) - 3;
            s.add_term(grade, std::move(e), static_cast<int64_t>(rng() % 19) - 9);
        }
        return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 3);
        const int trunc = 3 + static_cast<int>(rng() % 4);
        const auto a = random_series(vars, trunc, false);
        const auto b = random_series(vars, trunc, false);
        const auto c = random_series(vars, trunc, false);
        if (!((a + b) + c == a + (b + c))) return "addition is not associative (trial " + std::to_string(trial) + ")";
        if (!((a * b) * c == a * (b * c))) return "multiplication is not associative (trial " + std::to_string(trial) + ")";
        if (!(a * (b + c) == a * b + a * c)) return "distributivity failed (trial " + std::to_string(trial) + ")";
        const auto u = random_series(vars, trunc, true);
        if (!(u * series_invert(u) == graded_series::one(vars, trunc))) {
            return "inversion incorrect (trial " + std::to_string(trial) + ")";
        }
    }
    return std::nullopt;
}

} // namespace

int main() {
    verify_params bcs1_params;
    bcs1_params.tdeg = 8;
    verify_params cc_params;
    cc_params.tdeg = 9;

    std::vector<criterion> criteria;
    criteria.push_back({"Catalan counts |S_n(132)| for n=0..12", 60.0, criterion_catalan_counts});
    criteria.push_back({"vincular vs classical counts on host 35421", 0.0, criterion_worked_example});
    criteria.push_back({"a-statistics: enumeration equals C-family expansion (grades<=8)", 60.0,
                        [=] { return run_single("bcs1", bcs1_params); }});
    criteria.push_back({"e-statistics: enumeration equals D-family expansion (grades<=9)", 120.0,
                        [=] { return run_single("cc", cc_params); }});
    criteria.push_back({"f-statistics: enumeration equals E-family expansion (grades<=9)", 120.0,
                        [=] { return run_single("dd", cc_params); }});
    criteria.push_back({"binomial-transform batteries, 20 seeded matrices per direction (grades<=7)",
                        300.0, criterion_random_batteries});
    criteria.push_back({"Narayana histograms (n=1..10) and functional equation (grades<=10)", 0.0,
                        criterion_narayana});
    criteria.push_back({"aggregate ascent/descent statistics vs doubling-exponent cfracs (grades<=9)",
                        0.0, criterion_increasing});
    criteria.push_back({"zero-matrix C- and E-family expansions are Catalan and equal (grades<=10)",
                        0.0, criterion_catalan_cf});
    criteria.push_back({"fast recursion equals matcher on S_<=9(132); flipped indicator fails", 0.0,
                        criterion_recursions});
    criteria.push_back({"every expansion unchanged when depth increases by 2", 0.0,
                        criterion_depth_stability});
    criteria.push_back({"kernel: B*B^-1=I (R<=12), ring laws and inversion on 50 seeded operands",
                        0.0, criterion_kernel});

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        std::optional<std::string> failure;
        try {
            failure = c.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!failure && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            failure = "exceeded time budget of " + std::to_string(c.budget_seconds) + " s";
        }
        std::printf("[%s] criterion %02zu: %s (%.2f s)%s%s\n", failure ? "FAIL" : "PASS", i + 1,
                    c.name.c_str(), seconds, failure ? " - " : "",
                    failure ? failure->c_str() : "");
        std::fflush(stdout);
        if (failure) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
