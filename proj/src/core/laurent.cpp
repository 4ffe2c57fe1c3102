#include "core/laurent.hpp"

namespace pavcf {

namespace {

void check_same_vars(const laurent_poly& a, const laurent_poly& b) {
    if (a.vars() != b.vars()) {
        fail(errc::invalid_argument, "variable count mismatch: " + std::to_string(a.vars()) + " vs " +
                                         std::to_string(b.vars()));
    }
}

} // namespace

laurent_poly& laurent_poly::operator+=(const laurent_poly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

laurent_poly& laurent_poly::operator-=(const laurent_poly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

laurent_poly laurent_poly::operator-() const {
    laurent_poly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
    check_same_vars(a, b);
    laurent_poly out(a.vars());
    exp_vec e(static_cast<size_t>(a.vars()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

} // namespace pavcf
