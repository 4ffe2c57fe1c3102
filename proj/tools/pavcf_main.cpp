// pavcf command-line tool. Talks to the library exclusively through the
// public C API in pavcf/pavcf.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pavcf/pavcf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct owned_string {
    char* ptr = nullptr;
    ~owned_string() { pavcf_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int report_error(pavcf_status status) {
    std::cerr << "error: " << pavcf_last_error() << " (" << pavcf_status_name(status) << ")\n";
    return kExitUsage;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(kExitUsage);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct matrix_handle {
    pavcf_matrix* ptr = nullptr;
    ~matrix_handle() { pavcf_matrix_free(ptr); }
};

struct series_handle {
    pavcf_series* ptr = nullptr;
    ~series_handle() { pavcf_series_free(ptr); }
};

int run_count(const std::string& pattern, const std::string& perm) {
    uint64_t count = 0;
    if (auto st = pavcf_count_occurrences(pattern.c_str(), perm.c_str(), &count)) {
        return report_error(st);
    }
    std::cout << count << "\n";
    return kExitOk;
}

int run_avoiders(uint32_t n, uint32_t cap, bool count_only, const std::string& format) {
    if (count_only) {
        uint64_t count = 0;
        if (auto st = pavcf_avoiders_count(n, cap, &count)) return report_error(st);
        std::cout << count << "\n";
        return kExitOk;
    }
    pavcf_avoiders* it = nullptr;
    if (auto st = pavcf_avoiders_open(n, cap, &it)) return report_error(st);
    const uint32_t* word = nullptr;
    uint32_t len = 0;
    if (format == "json") {
        std::cout << "[";
        bool first = true;
        while (pavcf_avoiders_next(it, &word, &len)) {
            std::cout << (first ? "[" : ",[");
            first = false;
            for (uint32_t i = 0; i < len; ++i) std::cout << (i ? "," : "") << word[i];
            std::cout << "]";
        }
        std::cout << "]\n";
    } else {
        while (pavcf_avoiders_next(it, &word, &len)) {
            for (uint32_t i = 0; i < len; ++i) std::cout << (i ? "," : "") << word[i];
            std::cout << "\n";
        }
    }
    pavcf_avoiders_close(it);
    return kExitOk;
}

int run_dist(const std::string& stat, uint32_t n, uint32_t cap, const std::string& format) {
    owned_string out;
    const auto st = format == "csv" ? pavcf_distribution_csv(stat.c_str(), n, cap, &out.ptr)
                                    : pavcf_distribution_json(stat.c_str(), n, cap, &out.ptr);
    if (st) return report_error(st);
    std::cout << out.str();
    if (format != "csv") std::cout << "\n";
    return kExitOk;
}

int run_cf(const std::string& family, const std::string& matrix_path, uint32_t tdeg,
           const std::string& depth) {
    int32_t depth_value = 0; // auto
    if (depth != "auto") {
        try {
            depth_value = std::stoi(depth);
        } catch (...) {
            std::cerr << "error: --depth must be 'auto' or a positive integer\n";
            return kExitUsage;
        }
        if (depth_value < 1) {
            std::cerr << "error: --depth must be 'auto' or a positive integer\n";
            return kExitUsage;
        }
    }
    const std::string text = read_file(matrix_path);
    matrix_handle m;
    if (auto st = pavcf_matrix_parse(text.c_str(), &m.ptr)) return report_error(st);
    series_handle s;
    if (auto st = pavcf_cf_expand(family[0], m.ptr, tdeg, depth_value, &s.ptr)) {
        return report_error(st);
    }
    owned_string json;
    if (auto st = pavcf_series_to_json(s.ptr, &json.ptr)) return report_error(st);
    std::cout << json.str() << "\n";
    return kExitOk;
}

int run_gf(const std::string& family, const std::string& matrix_path, uint32_t tdeg, uint32_t cap) {
    const std::string text = read_file(matrix_path);
    matrix_handle m;
    if (auto st = pavcf_matrix_parse(text.c_str(), &m.ptr)) return report_error(st);
    series_handle s;
    if (auto st = pavcf_gf_enumerate(family[0], m.ptr, tdeg, cap, &s.ptr)) {
        return report_error(st);
    }
    owned_string json;
    if (auto st = pavcf_series_to_json(s.ptr, &json.ptr)) return report_error(st);
    std::cout << json.str() << "\n";
    return kExitOk;
}

int run_verify(const std::string& check, int32_t n, int32_t tdeg, int32_t trials, int64_t seed,
               const std::string& format) {
    pavcf_verify_options opts;
    pavcf_verify_options_init(&opts);
    opts.n = n;
    opts.tdeg = tdeg;
    opts.trials = trials;
    opts.seed = seed;
    owned_string out;
    int all_passed = 0;
    if (auto st = pavcf_verify_run(check.c_str(), &opts, format == "text" ? 1 : 0, &out.ptr,
                                   &all_passed)) {
        return report_error(st);
    }
    std::cout << out.str();
    if (format != "text") std::cout << "\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern statistics, continued fractions and verification "
                 "over 132-avoiding permutations"};
    app.require_subcommand(1);

    std::string pattern, perm;
    auto* count = app.add_subcommand("count", "count occurrences of a pattern in a permutation");
    count->add_option("--pattern", pattern, "dash-notation pattern, e.g. \"23-1\"")->required();
    count->add_option("--perm", perm, "host permutation, e.g. \"3,5,4,2,1\"")->required();

    uint32_t n = 0, cap = 0, tdeg = 0;
    bool count_only = false;
    std::string format = "text";
    auto* avoiders = app.add_subcommand("avoiders", "enumerate S_n(1-3-2) in generator order");
    avoiders->add_option("--n", n, "permutation length")->required();
    avoiders->add_option("--cap", cap, "enumeration cap override (default 14)");
    avoiders->add_flag("--count", count_only, "print only the number of avoiders");
    avoiders->add_option("--format", format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    std::string stat, dist_format = "json";
    auto* dist = app.add_subcommand("dist", "distribution of a statistic over S_n(1-3-2)");
    dist->add_option("--stat", stat, "statistic spec: a3, e2, f4, e*, f*")->required();
    dist->add_option("--n", n, "permutation length")->required();
    dist->add_option("--cap", cap, "enumeration cap override (default 14)");
    dist->add_option("--format", dist_format, "json|csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string family, matrix_path, depth = "auto";
    auto* cf = app.add_subcommand("cf", "expand a continued fraction as a graded series");
    cf->add_option("--family", family, "C|D|E")->required()->check(CLI::IsMember({"C", "D", "E"}));
    cf->add_option("--matrix", matrix_path, "statistic matrix JSON file")->required();
    cf->add_option("--tdeg", tdeg, "truncation order (grading variable q1)")->required();
    cf->add_option("--depth", depth, "auto (self-checked) or an explicit depth");

    auto* gf = app.add_subcommand("gf", "brute-force generating function over S_<=N(1-3-2)");
    gf->add_option("--family", family, "a|e|f")->required()->check(CLI::IsMember({"a", "e", "f"}));
    gf->add_option("--matrix", matrix_path, "statistic matrix JSON file")->required();
    gf->add_option("--tdeg", tdeg, "length bound / truncation order")->required();
    gf->add_option("--cap", cap, "enumeration cap override (default 14)");

    std::string check = "all", verify_format = "text";
    int32_t vn = -1, vtdeg = -1, vtrials = -1;
    int64_t seed = 42;
    auto* verify = app.add_subcommand("verify", "run equality checks between enumeration and "
                                                "continued-fraction expansions");
    verify->add_option("--check", check, "check id or 'all' (default all)");
    verify->add_option("--n", vn, "length bound override");
    verify->add_option("--tdeg", vtdeg, "truncation override");
    verify->add_option("--trials", vtrials, "random battery size override");
    verify->add_option("--seed", seed, "PRNG seed (default 42)");
    verify->add_option("--format", verify_format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    if (count->parsed()) return run_count(pattern, perm);
    if (avoiders->parsed()) return run_avoiders(n, cap, count_only, format);
    if (dist->parsed()) return run_dist(stat, n, cap, dist_format);
    if (cf->parsed()) return run_cf(family, matrix_path, tdeg, depth);
    if (gf->parsed()) return run_gf(family, matrix_path, tdeg, cap);
    if (verify->parsed()) return run_verify(check, vn, vtdeg, vtrials, seed, verify_format);
    return kExitUsage;
}
