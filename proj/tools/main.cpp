#include "CLI11.hpp"

#include "seqsym/multfunc.hpp"
#include "seqsym/render.hpp"
#include "seqsym/seqmatrix.hpp"
#include "seqsym/verify.hpp"
#include "seqsym/zolotarev.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

seqsym::RenderFormat parse_format(const std::string& name) {
    const auto f = seqsym::format_from_string(name);
    if (!f) {
        throw std::invalid_argument("unknown format '" + name + "' (use text, csv, json or pgm)");
    }
    return *f;
}

seqsym::DihedralElement parse_sigma(const std::string& name) {
    const auto s = seqsym::dihedral_from_string(name);
    if (!s) {
        throw std::invalid_argument(
            "unknown symmetry '" + name +
            "' (use identity, rho, rho2, rho3, tau, tau_rho, tau_rho2 or tau_rho3)");
    }
    return *s;
}

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
        throw std::invalid_argument("range must look like LO..HI, got '" + text + "'");
    }
    Range r;
    try {
        std::size_t used = 0;
        r.lo = std::stoll(text.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument("");
        const std::string hi = text.substr(sep + 2);
        r.hi = std::stoll(hi, &used);
        if (used != hi.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like LO..HI, got '" + text + "'");
    }
    return r;
}

int cmd_gen(int n, const std::string& format) {
    std::cout << seqsym::render(seqsym::sequential(n), parse_format(format));
    return kExitOk;
}

int cmd_sym(int n, const std::string& sigma_name, const std::string& map_name,
            const std::string& format) {
    const auto sigma = parse_sigma(sigma_name);
    const auto fmt = parse_format(format);
    const auto transformed = seqsym::apply(sigma, seqsym::sequential(n));
    if (map_name == "none") {
        std::cout << seqsym::render(transformed, fmt);
    } else if (map_name == "jacobi") {
        if (n % 2 != 0) {
            throw std::invalid_argument("the jacobi map needs even n: n = " + std::to_string(n) +
                                        " gives modulus m = n^2+1 = " +
                                        std::to_string(transformed.modulus().value()) +
                                        ", which is even");
        }
        std::cout << seqsym::render(seqsym::jacobi_matrix(transformed), fmt);
    } else {
        throw std::invalid_argument("unknown map '" + map_name + "' (use none or jacobi)");
    }
    return kExitOk;
}

int cmd_jacobi(std::int64_t a, std::int64_t m) {
    std::cout << seqsym::jacobi(a, m) << "\n";
    return kExitOk;
}

int cmd_zolotarev(std::int64_t a, std::int64_t m) {
    if (m < 3 || m % 2 == 0) {
        throw std::invalid_argument("zolotarev: m must be odd and >= 3, got " + std::to_string(m));
    }
    const seqsym::Permutation f = seqsym::mult_perm(a, m);
    const int sign = seqsym::signature(f);
    const seqsym::Sign symbol = seqsym::jacobi(a, m);
    std::cout << "jacobi = " << symbol << "\n";
    std::cout << "signature = " << sign << "\n";
    std::cout << "cycle_lengths = ";
    const auto lengths = seqsym::cycles(f).lengths();
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << lengths[i];
    }
    std::cout << "\n";
    const bool agree = (symbol == sign);
    std::cout << "agree = " << (agree ? "true" : "false") << "\n";
    return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const std::string& check, const std::string& range_text, int workers,
               bool json_report) {
    const Range range = parse_range(range_text);
    const auto report = seqsym::run_verification(check, range.lo, range.hi, workers);
    std::cout << (json_report ? report.to_json_string() : report.to_text());
    return report.pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential matrices over Z/(n^2+1)Z: dihedral symmetries, Jacobi symbols and "
                 "Zolotarev permutation checks"};
    app.require_subcommand(1);

    std::function<int()> action;

    int gen_n = 1;
    std::string gen_format = "text";
    auto* gen = app.add_subcommand("gen", "Print the n x n sequential matrix Q_n");
    gen->add_option("n", gen_n, "matrix side, n >= 1")->required();
    gen->add_option("--format", gen_format, "text, csv, json or pgm");
    gen->callback([&] { action = [&] { return cmd_gen(gen_n, gen_format); }; });

    int sym_n = 1;
    std::string sym_sigma;
    std::string sym_map = "none";
    std::string sym_format = "text";
    auto* sym = app.add_subcommand("sym", "Print sigma(Q_n), optionally through the Jacobi symbol");
    sym->add_option("n", sym_n, "matrix side, n >= 1")->required();
    sym->add_option("sigma", sym_sigma, "one of the eight square symmetries")->required();
    sym->add_option("--map", sym_map, "none or jacobi (jacobi needs even n)");
    sym->add_option("--format", sym_format, "text, csv, json or pgm");
    sym->callback([&] { action = [&] { return cmd_sym(sym_n, sym_sigma, sym_map, sym_format); }; });

    std::int64_t jac_a = 0, jac_m = 0;
    auto* jac = app.add_subcommand("jacobi", "Print the Jacobi symbol (a/m) for odd m >= 3");
    jac->add_option("a", jac_a, "numerator, any integer")->required();
    jac->add_option("m", jac_m, "odd modulus >= 3")->required();
    jac->callback([&] { action = [&] { return cmd_jacobi(jac_a, jac_m); }; });

    std::int64_t zol_a = 0, zol_m = 0;
    auto* zol = app.add_subcommand(
        "zolotarev", "Compare (a/m) with the signature of x -> a*x on Z/mZ, with cycle summary");
    zol->add_option("a", zol_a, "unit mod m")->required();
    zol->add_option("m", zol_m, "odd modulus >= 3")->required();
    zol->callback([&] { action = [&] { return cmd_zolotarev(zol_a, zol_m); }; });

    std::string verify_check;
    std::string verify_range;
    int verify_workers = 1;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run one identity check over a parameter range");
    std::string check_help = "one of:";
    for (const auto& name : seqsym::verification_names()) check_help += " " + name;
    verify->add_option("check", verify_check, check_help)->required();
    verify->add_option("--range", verify_range, "inclusive parameter range LO..HI")->required();
    verify->add_option("--workers", verify_workers, "worker threads (default 1)");
    verify->add_flag("--json-report", verify_json, "machine-readable report");
    verify->callback([&] {
        action = [&] { return cmd_verify(verify_check, verify_range, verify_workers, verify_json); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
