#include "pavcf/pavcf.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "core/cfrac.hpp"
#include "core/gf_oracle.hpp"
#include "core/serialize.hpp"
#include "core/verify.hpp"

using namespace pavcf;

struct pavcf_matrix {
    stat_matrix m;
};

struct pavcf_series {
    graded_series s;
};

struct pavcf_avoiders {
    std::vector<uint8_t> flat; // words back to back, n bytes each
    uint32_t n = 0;
    size_t pos = 0;
    std::vector<uint32_t> current;
};

namespace {

thread_local std::string t_last_error;

pavcf_status to_status(errc code) {
    switch (code) {
    case errc::invalid_argument: return PAVCF_ERR_INVALID_ARGUMENT;
    case errc::limit_exceeded: return PAVCF_ERR_LIMIT_EXCEEDED;
    case errc::internal: return PAVCF_ERR_INTERNAL;
    }
    return PAVCF_ERR_INTERNAL;
}

template <typename F>
pavcf_status guarded(F&& body) {
    try {
        t_last_error.clear();
        body();
        return PAVCF_OK;
    } catch (const error& e) {
        t_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PAVCF_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) fail(errc::invalid_argument, what);
}

int resolve_cap(uint32_t cap, int fallback) {
    return cap == 0 ? fallback : static_cast<int>(cap);
}

stat_family parse_family_aef(char family) {
    switch (family) {
    case 'a': return stat_family::a;
    case 'e': return stat_family::e;
    case 'f': return stat_family::f;
    default: fail(errc::invalid_argument, "family must be 'a', 'e' or 'f'");
    }
}

cf_family parse_family_cde(char family) {
    switch (family) {
    case 'C': return cf_family::C;
    case 'D': return cf_family::D;
    case 'E': return cf_family::E;
    default: fail(errc::invalid_argument, "family must be 'C', 'D' or 'E'");
    }
}

} // namespace

extern "C" {

const char* pavcf_status_name(pavcf_status status) {
    switch (status) {
    case PAVCF_OK: return "ok";
    case PAVCF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PAVCF_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case PAVCF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pavcf_last_error(void) { return t_last_error.c_str(); }

void pavcf_string_free(char* s) { delete[] s; }

pavcf_status pavcf_count_occurrences(const char* pattern, const char* perm, uint64_t* out) {
    return guarded([&] {
        require(pattern && perm && out, "null argument");
        const auto p = generalized_pattern::parse(pattern);
        const auto host = permutation::parse(perm);
        *out = count_occurrences(p, host);
    });
}

pavcf_status pavcf_avoids(const char* perm, const char* pattern, int* out) {
    return guarded([&] {
        require(pattern && perm && out, "null argument");
        const auto p = generalized_pattern::parse(pattern);
        const auto host = permutation::parse(perm);
        *out = avoids(host, p) ? 1 : 0;
    });
}

pavcf_status pavcf_avoiders_open(uint32_t n, uint32_t cap, pavcf_avoiders** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        require(n <= 255, "length too large for the iterator");
        auto it = std::make_unique<pavcf_avoiders>();
        it->n = n;
        it->flat.reserve(1024);
        for_each_avoider_132(
            static_cast<int>(n),
            [&](const std::vector<int>& word) {
                for (int v : word) it->flat.push_back(static_cast<uint8_t>(v));
            },
            resolve_cap(cap, k_avoiders_cap));
        it->current.resize(n);
        *out = it.release();
    });
}

int pavcf_avoiders_next(pavcf_avoiders* it, const uint32_t** word, uint32_t* len) {
    if (!it || !word || !len) return 0;
    const size_t n = it->n;
    if (n == 0) {
        // single empty permutation
        if (it->pos != 0) return 0;
        it->pos = 1;
        *word = it->current.data();
        *len = 0;
        return 1;
    }
    if (it->pos + n > it->flat.size()) return 0;
    for (size_t i = 0; i < n; ++i) it->current[i] = it->flat[it->pos + i];
    it->pos += n;
    *word = it->current.data();
    *len = it->n;
    return 1;
}

void pavcf_avoiders_close(pavcf_avoiders* it) { delete it; }

pavcf_status pavcf_avoiders_count(uint32_t n, uint32_t cap, uint64_t* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        uint64_t count = 0;
        for_each_avoider_132(
            static_cast<int>(n), [&](const std::vector<int>&) { ++count; },
            resolve_cap(cap, k_avoiders_cap));
        *out = count;
    });
}

pavcf_status pavcf_distribution_json(const char* stat, uint32_t n, uint32_t cap, char** out) {
    return guarded([&] {
        require(stat && out, "null argument");
        const auto hist = distribution(stat, static_cast<int>(n), resolve_cap(cap, k_avoiders_cap));
        std::string json = "{\"stat\":\"" + std::string(stat) + "\",\"n\":" + std::to_string(n) +
                           ",\"entries\":[";
        bool first = true;
        for (const auto& [k, count] : hist) {
            if (!first) json += ',';
            first = false;
            json += "{\"k\":" + std::to_string(k) + ",\"count\":" + std::to_string(count) + "}";
        }
        json += "]}";
        *out = dup_string(json);
    });
}

pavcf_status pavcf_distribution_csv(const char* stat, uint32_t n, uint32_t cap, char** out) {
    return guarded([&] {
        require(stat && out, "null argument");
        const auto hist = distribution(stat, static_cast<int>(n), resolve_cap(cap, k_avoiders_cap));
        std::string csv = "k,count\n";
        for (const auto& [k, count] : hist) {
            csv += std::to_string(k) + "," + std::to_string(count) + "\n";
        }
        *out = dup_string(csv);
    });
}

pavcf_status pavcf_matrix_parse(const char* json_text, pavcf_matrix** out) {
    return guarded([&] {
        require(json_text && out, "null argument");
        *out = new pavcf_matrix{matrix_from_json(json_text)};
    });
}

pavcf_status pavcf_matrix_identity(uint32_t n, pavcf_matrix** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        require(n >= 1, "identity size must be >= 1");
        *out = new pavcf_matrix{stat_matrix::identity(static_cast<int>(n))};
    });
}

void pavcf_matrix_free(pavcf_matrix* m) { delete m; }

pavcf_status pavcf_cf_expand(char family, const pavcf_matrix* matrix, uint32_t tdeg, int32_t depth,
                             pavcf_series** out) {
    return guarded([&] {
        require(matrix && out, "null argument");
        const cf_family fam = parse_family_cde(family);
        graded_series s = depth <= 0
                              ? stable_expand(fam, matrix->m, static_cast<int>(tdeg))
                              : expand_at_depth(fam, matrix->m, static_cast<int>(tdeg), depth);
        *out = new pavcf_series{std::move(s)};
    });
}

pavcf_status pavcf_gf_enumerate(char family, const pavcf_matrix* matrix, uint32_t tdeg, uint32_t cap,
                                pavcf_series** out) {
    return guarded([&] {
        require(matrix && out, "null argument");
        const stat_family fam = parse_family_aef(family);
        graded_series s = enumerate_gf(fam, matrix->m, static_cast<int>(tdeg),
                                       resolve_cap(cap, k_avoiders_cap));
        *out = new pavcf_series{std::move(s)};
    });
}

pavcf_status pavcf_series_to_json(const pavcf_series* s, char** out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = dup_string(series_to_json(s->s));
    });
}

pavcf_status pavcf_series_equal(const pavcf_series* a, const pavcf_series* b, int* out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = (a->s == b->s) ? 1 : 0;
    });
}

void pavcf_series_free(pavcf_series* s) { delete s; }

void pavcf_verify_options_init(pavcf_verify_options* opts) {
    if (!opts) return;
    opts->n = -1;
    opts->tdeg = -1;
    opts->trials = -1;
    opts->seed = 42;
}

pavcf_status pavcf_verify_run(const char* check_id, const pavcf_verify_options* opts,
                              int text_format, char** out_report, int* all_passed) {
    return guarded([&] {
        require(check_id && out_report && all_passed, "null argument");
        verify_params params;
        if (opts) {
            params.n = opts->n;
            params.tdeg = opts->tdeg;
            params.trials = opts->trials;
            params.seed = static_cast<uint64_t>(opts->seed);
        }
        std::vector<report> reports;
        if (std::string_view(check_id) == "all") {
            reports = run_all(params);
        } else {
            reports.push_back(run_check(check_id, params));
        }
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.pass;
        *all_passed = ok ? 1 : 0;
        *out_report = dup_string(text_format ? reports_to_text(reports) : reports_to_json(reports));
    });
}

} // extern "C"
