#include "core/cfrac.hpp"

#include <algorithm>

namespace pavcf {

cf_spec build_cf(cf_family family, const stat_matrix& m, int depth, int vars) {
    if (depth < 1) fail(errc::invalid_argument, "continued-fraction depth must be >= 1");
    if (m.rows() < depth) {
        fail(errc::invalid_argument, "matrix has " + std::to_string(m.rows()) + " rows but depth " +
                                         std::to_string(depth) +
                                         " levels are required; extend the matrix explicitly");
    }
    if (m.cols() > vars) {
        fail(errc::invalid_argument, "matrix has more columns than series variables");
    }
    cf_spec spec{family, depth, vars, {}};
    spec.levels.reserve(static_cast<size_t>(depth));
    for (int n = 1; n <= depth; ++n) {
        exp_vec e(static_cast<size_t>(vars), 0);
        for (int k = 1; k <= m.cols(); ++k) e[static_cast<size_t>(k - 1)] = m.at(n, k);
        spec.levels.push_back(std::move(e));
    }
    // Every numerator carries the q1 marker, so its q1-degree is 1 by
    // construction; a level failing this would make the expansion ungradable.
    return spec;
}

graded_series evaluate_cf(const cf_spec& spec, int trunc) {
    const int vars = spec.vars;
    const exp_vec zero(static_cast<size_t>(vars), 0);
    // Numerators carry one q1 each; at truncation 0 they vanish entirely.
    auto grade1 = [&](const exp_vec& e) {
        return trunc >= 1 ? graded_series::monomial(vars, trunc, 1, e, 1)
                          : graded_series(vars, trunc);
    };
    graded_series w = graded_series::one(vars, trunc);
    const graded_series one = graded_series::one(vars, trunc);
    const graded_series q1 = grade1(zero);

    try {
        for (int n = spec.depth; n >= 1; --n) {
            const exp_vec& e = spec.levels[static_cast<size_t>(n - 1)];
            switch (spec.family) {
            case cf_family::C: {
                // 1 / (1 - d_n * w)
                w = series_invert(one - mul_monomial(w, 1, e));
                break;
            }
            case cf_family::D: {
                // 1 / (1 - q1 + d_n - d_n * w)
                w = series_invert(one - q1 + grade1(e) - mul_monomial(w, 1, e));
                break;
            }
            case cf_family::E: {
                // 1 - q1 / (d_n - 1/w)
                const graded_series inner = grade1(e) - series_invert(w);
                w = one - mul_monomial(series_invert(inner), 1, zero);
                break;
            }
            }
        }
    } catch (const error& e) {
        // A valid spec keeps every inversion's leading coefficient at +-1.
        fail(errc::internal, std::string("continued-fraction evaluation failed: ") + e.what());
    }
    return w;
}

int default_depth(cf_family family, int trunc) {
    return family == cf_family::E ? 2 * trunc + 4 : trunc + 2;
}

graded_series expand_cf_stable(cf_family family,
                               const std::function<stat_matrix(int)>& materialize, int trunc) {
    const int base = default_depth(family, trunc);
    const int bound = base + 12;
    auto eval_at = [&](int depth) {
        const stat_matrix m = materialize(depth);
        return evaluate_cf(build_cf(family, m, depth, m.cols()), trunc);
    };
    graded_series current = eval_at(base);
    for (int depth = base; depth <= bound; depth += 2) {
        graded_series deeper = eval_at(depth + 2);
        if (current == deeper) return current;
        current = std::move(deeper);
    }
    fail(errc::internal, "depth instability: expansions kept changing up to depth " +
                             std::to_string(bound + 2) + "; the level data is inconsistent");
}

namespace {

// B * a with a zero-extended so rows 1..depth of the product exist. Rows of
// `a` beyond the requested depth still participate (B is lower-triangular,
// so they only affect rows the caller will not read).
stat_matrix binomial_transform(const stat_matrix& a, int depth) {
    const int r = std::max(depth, a.rows());
    return multiply(binomial(r), pad_rows(a, r));
}

} // namespace

graded_series stable_expand(cf_family family, const stat_matrix& a, int trunc) {
    auto transformed = [&a](int depth) { return binomial_transform(a, depth); };
    return expand_cf_stable(family, transformed, trunc);
}

graded_series expand_at_depth(cf_family family, const stat_matrix& a, int trunc, int depth) {
    if (depth < 1) fail(errc::invalid_argument, "depth must be >= 1");
    const stat_matrix m = binomial_transform(a, depth);
    return evaluate_cf(build_cf(family, m, depth, m.cols()), trunc);
}

} // namespace pavcf
