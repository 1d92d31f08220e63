#include "seqsym/verify.hpp"

#include "seqsym/multfunc.hpp"
#include "seqsym/seqmatrix.hpp"
#include "seqsym/zolotarev.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace seqsym {

namespace {

enum class ParamFilter { all_n, even_n, odd_m };

struct CaseResult {
    bool skipped = false;
    std::int64_t cases = 0;
    std::int64_t failure_count = 0;       // true count
    std::vector<VerifyFailure> failures;  // smallest ones, capped
    std::string error;                    // nonempty if the case threw
};

struct CheckDef {
    std::string name;
    ParamFilter filter;
    std::function<CaseResult(std::int64_t)> run;
};

CaseResult single_case(bool ok, std::int64_t param) {
    CaseResult r;
    r.cases = 1;
    if (!ok) {
        r.failure_count = 1;
        r.failures.push_back({param, -1});
    }
    return r;
}

CaseResult zolotarev_case(std::int64_t m) {
    CaseResult r;
    for (std::int64_t a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        ++r.cases;
        if (!check_zolotarev(a, m)) {
            ++r.failure_count;
            if (r.failures.size() < kMaxReportedFailures) {
                r.failures.push_back({m, a});
            }
        }
    }
    return r;
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"theorem1", ParamFilter::all_n,
         [](std::int64_t n) { return single_case(check_theorem1(static_cast<int>(n)), n); }},
        {"table", ParamFilter::all_n,
         [](std::int64_t n) {
             const int v = static_cast<int>(n);
             return single_case(check_value_table(v) && check_realizations(v), n);
         }},
        {"corollary", ParamFilter::even_n,
         [](std::int64_t n) {
             const int v = static_cast<int>(n);
             const Modulus m(static_cast<std::int64_t>(v) * v + 1);
             return single_case(check_corollary(MultiplicativeMap::jacobi_symbol(m), v), n);
         }},
        {"jacobi-theorem", ParamFilter::even_n,
         [](std::int64_t n) {
             return single_case(check_jacobi_theorem(static_cast<int>(n)).holds, n);
         }},
        {"basic-symmetry", ParamFilter::even_n,
         [](std::int64_t n) { return single_case(check_basic_symmetry(static_cast<int>(n)), n); }},
        {"lemma", ParamFilter::even_n,
         [](std::int64_t n) { return single_case(check_lemma(static_cast<int>(n)), n); }},
        {"cycles", ParamFilter::even_n,
         [](std::int64_t n) { return single_case(check_cycle_structure(static_cast<int>(n)), n); }},
        {"zolotarev", ParamFilter::odd_m, zolotarev_case},
    };
    return defs;
}

const CheckDef& lookup(const std::string& name) {
    for (const auto& def : registry()) {
        if (def.name == name) return def;
    }
    std::string known;
    for (const auto& def : registry()) {
        if (!known.empty()) known += ", ";
        known += def.name;
    }
    throw std::invalid_argument("unknown check '" + name + "' (known: " + known + ")");
}

bool param_applies(ParamFilter filter, std::int64_t p) {
    switch (filter) {
        case ParamFilter::all_n: return true;
        case ParamFilter::even_n: return p % 2 == 0;
        case ParamFilter::odd_m: return p % 2 == 1;
    }
    return false;
}

std::string failure_label(const std::string& param_name, const VerifyFailure& f) {
    std::string out = param_name + "=" + std::to_string(f.primary);
    if (f.secondary >= 0) {
        out += " a=" + std::to_string(f.secondary);
    }
    return out;
}

}  // namespace

std::string VerificationReport::to_text() const {
    std::string out;
    out += "check: " + check + "\n";
    out += "range: " + std::to_string(lo) + ".." + std::to_string(hi) + "\n";
    out += "cases: " + std::to_string(cases) + "\n";
    out += "skipped: " + std::to_string(skipped) + "\n";
    out += "failures: " + std::to_string(failure_count) + "\n";
    for (const auto& f : failures) {
        out += "  " + failure_label(param_name, f) + "\n";
    }
    if (failure_count > static_cast<std::int64_t>(failures.size())) {
        out += "  ... and " +
               std::to_string(failure_count - static_cast<std::int64_t>(failures.size())) +
               " more\n";
    }
    out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
    char wall[64];
    std::snprintf(wall, sizeof(wall), "wall_seconds: %.3f\n", wall_seconds);
    out += wall;
    return out;
}

std::string VerificationReport::to_json_string() const {
    nlohmann::json j;
    j["check"] = check;
    j["range"] = std::to_string(lo) + ".." + std::to_string(hi);
    j["param"] = param_name;
    j["cases"] = cases;
    j["skipped"] = skipped;
    j["failure_count"] = failure_count;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json one;
        one[param_name] = f.primary;
        if (f.secondary >= 0) one["a"] = f.secondary;
        fails.push_back(std::move(one));
    }
    j["failures"] = std::move(fails);
    j["pass"] = pass();
    j["wall_seconds"] = wall_seconds;
    return j.dump() + "\n";
}

const std::vector<std::string>& verification_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& def : registry()) out.push_back(def.name);
        return out;
    }();
    return names;
}

VerificationReport run_verification(const std::string& check, std::int64_t lo, std::int64_t hi,
                                    int workers) {
    const CheckDef& def = lookup(check);
    if (lo < 1 || hi < lo) {
        throw std::invalid_argument("range bounds must satisfy 1 <= lo <= hi, got " +
                                    std::to_string(lo) + ".." + std::to_string(hi));
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be >= 1");
    }

    const auto started = std::chrono::steady_clock::now();

    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<CaseResult> results(count);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::int64_t p = lo + static_cast<std::int64_t>(idx);
            CaseResult& r = results[idx];
            if (!param_applies(def.filter, p)) {
                r.skipped = true;
                continue;
            }
            try {
                r = def.run(p);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };

    const int used_workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1)));
    if (used_workers <= 1) {
        run_range(0, count);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(used_workers));
        const std::size_t chunk = (count + static_cast<std::size_t>(used_workers) - 1) /
                                  static_cast<std::size_t>(used_workers);
        for (int w = 0; w < used_workers; ++w) {
            const std::size_t begin = static_cast<std::size_t>(w) * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(run_range, begin, end);
        }
        for (auto& t : threads) t.join();
    }

    VerificationReport report;
    report.check = def.name;
    report.lo = lo;
    report.hi = hi;
    report.param_name = def.filter == ParamFilter::odd_m ? "m" : "n";

    std::vector<VerifyFailure> all_failures;
    for (const auto& r : results) {
        if (!r.error.empty()) {
            throw std::runtime_error("check '" + def.name + "' raised: " + r.error);
        }
        if (r.skipped) {
            ++report.skipped;
            continue;
        }
        report.cases += r.cases;
        report.failure_count += r.failure_count;
        all_failures.insert(all_failures.end(), r.failures.begin(), r.failures.end());
    }
    if (report.cases == 0) {
        throw std::invalid_argument("empty effective range: no " + report.param_name +
                                    " in " + std::to_string(lo) + ".." + std::to_string(hi) +
                                    " applies to check '" + def.name + "'");
    }
    std::sort(all_failures.begin(), all_failures.end());
    if (all_failures.size() > kMaxReportedFailures) {
        all_failures.resize(kMaxReportedFailures);
    }
    report.failures = std::move(all_failures);

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace seqsym
