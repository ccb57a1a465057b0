#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bentqf/criteria.hpp"
#include "bentqf/enumeration.hpp"
#include "bentqf/intmath.hpp"
#include "bentqf/json_io.hpp"
#include "bentqf/kernels.hpp"
#include "bentqf/poly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// `auto` adds the spectral oracle only while the 2^n table stays cheap.
constexpr int kAutoSpectralCap = 20;

// Flag-level problems (malformed coefficient lists and the like); the
// library's own exceptions map to the domain exit code instead.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_coeff_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--coeffs: '" + item + "' is not an unsigned integer");
        }
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw UsageError("--coeffs: '" + item + "' is out of range");
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

bentqf::QuadForm parse_form(int e, long m, const std::string& coeff_text) {
    const auto coeffs = parse_coeff_list(coeff_text);
    bentqf::ContextPtr ctx = bentqf::make_context(e, static_cast<int>(m));
    if (coeffs.size() != static_cast<std::size_t>(m / 2)) {
        throw UsageError("--coeffs: expected exactly m/2 = " + std::to_string(m / 2) +
                         " entries, got " + std::to_string(coeffs.size()));
    }
    for (const std::uint64_t c : coeffs) {
        if (!ctx->small_field().contains(c)) {
            throw UsageError("--coeffs: value " + std::to_string(c) +
                             " is outside GF(2^" + std::to_string(e) + ")");
        }
    }
    return bentqf::QuadForm(std::move(ctx), coeffs);
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

int cmd_verify(int e, long m, const std::string& coeff_text, const std::string& method) {
    const bentqf::QuadForm f = parse_form(e, m, coeff_text);
    json methods = json::object();
    std::optional<bool> verdict;
    bool disagree = false;
    std::string certificate;
    const auto record = [&](const char* name, bool bent) {
        methods[name] = bent;
        if (verdict && *verdict != bent) {
            disagree = true;
        }
        if (!verdict) {
            verdict = bent;
        }
    };
    if (method == "auto" || method == "gcd") {
        const bentqf::GcdVerdict g = bentqf::is_bent_gcd(f);
        record("gcd", g.bent);
        if (!g.bent) {
            certificate = g.certificate.to_coeff_string();
        }
    }
    if (method == "auto" || method == "rank") {
        record("rank", bentqf::is_bent_rank(f));
    }
    if (method == "spectral" || (method == "auto" && f.dimension() <= kAutoSpectralCap)) {
        record("spectral", bentqf::is_bent_spectral(f));
    }
    if (method == "structural") {
        const bentqf::ParamClass cls = bentqf::classify(e, m);
        if (cls.kind == bentqf::ParamKind::Unsupported) {
            throw std::domain_error("structural criterion unavailable: " + cls.failed_condition);
        }
        record("structural", cls.kind == bentqf::ParamKind::PR ? bentqf::check_pr(f, cls)
                                                               : bentqf::check_pq(f, cls));
    }
    json out = bentqf::to_json(f);
    out["bent"] = *verdict;
    out["methods"] = methods;
    out["certificate"] = certificate.empty() ? json(nullptr) : json(certificate);
    emit(out);
    if (disagree) {
        std::cerr << "bentqf: oracle disagreement (see \"methods\")\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_spectrum(int e, long m, const std::string& coeff_text) {
    const bentqf::QuadForm f = parse_form(e, m, coeff_text);
    emit(bentqf::to_json(bentqf::walsh_spectrum(f)));
    return kExitOk;
}

int cmd_classify(int e, long m) {
    emit(bentqf::to_json(bentqf::classify(e, m)));
    return kExitOk;
}

int cmd_enumerate(int e, long m, const std::string& mode, const std::string& oracle_name,
                  int max_bits) {
    bentqf::OracleKind oracle = bentqf::OracleKind::Gcd;
    if (oracle_name == "rank") {
        oracle = bentqf::OracleKind::Rank;
    } else if (oracle_name == "structural") {
        oracle = bentqf::OracleKind::Structural;
    }
    const bool with_formula = mode == "formula" || mode == "both";
    const bool with_exhaustive = mode == "exhaustive" || mode == "both";
    const bentqf::CountReport report =
        bentqf::make_count_report(e, m, with_formula, with_exhaustive, oracle, max_bits);
    emit(bentqf::to_json(report));
    if (with_formula && with_exhaustive &&
        *report.formula != bentqf::BigInt(*report.exhaustive)) {
        std::cerr << "bentqf: formula and exhaustive counts disagree\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_sample(int e, long m, std::uint64_t seed, std::uint64_t count) {
    bentqf::SampleStats stats;
    const auto functions =
        bentqf::sample_bent(e, m, seed, static_cast<std::size_t>(count), &stats);
    json list = json::array();
    for (const auto& f : functions) {
        list.push_back(f.coeffs());
    }
    emit(json{{"e", e},
              {"m", m},
              {"seed", seed},
              {"count", count},
              {"draws", stats.draws},
              {"functions", list}});
    return kExitOk;
}

int cmd_cyclotomic(long d) {
    const bentqf::Gf2Field f2 = bentqf::Gf2Field::with_default_modulus(1);
    const bentqf::Poly q = bentqf::cyclotomic(d, f2);
    emit(json{{"d", d},
              {"degree", q.degree() ? json(*q.degree()) : json(nullptr)},
              {"poly", q.to_coeff_string()}});
    return kExitOk;
}

int cmd_order(long base, long modulus) {
    emit(json{{"base", base}, {"modulus", modulus}, {"order", bentqf::mult_order(base, modulus)}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic bent trace-form toolkit"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "cap OpenMP worker count (0 = runtime default)");

    int e = 1;
    long m = 2;
    std::string coeffs;
    std::string method = "auto";
    std::string mode = "both";
    std::string oracle = "gcd";
    int max_bits = bentqf::kSweepCapBits;
    std::uint64_t seed = 1;
    std::uint64_t count = 1;
    long d = 1;
    long base = 2;
    long modulus = 3;

    CLI::App* verify = app.add_subcommand("verify", "run bentness oracles on one form");
    verify->add_option("--e", e, "subfield degree e")->required();
    verify->add_option("--m", m, "trace-form length m (even)")->required();
    verify->add_option("--coeffs", coeffs, "comma-separated c_1,...,c_{m/2}")->required();
    verify->add_option("--method", method, "oracle selection")
        ->check(CLI::IsMember({"auto", "gcd", "rank", "spectral", "structural"}));

    CLI::App* spectrum = app.add_subcommand("spectrum", "full Hadamard spectrum of one form");
    spectrum->add_option("--e", e)->required();
    spectrum->add_option("--m", m)->required();
    spectrum->add_option("--coeffs", coeffs)->required();

    CLI::App* classify = app.add_subcommand("classify", "parameter-class report for (e, m)");
    classify->add_option("--e", e)->required();
    classify->add_option("--m", m)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "bent-function counts for (e, m)");
    enumerate->add_option("--e", e)->required();
    enumerate->add_option("--m", m)->required();
    enumerate->add_option("--mode", mode)->check(CLI::IsMember({"formula", "exhaustive", "both"}));
    enumerate->add_option("--oracle", oracle, "sweep oracle")
        ->check(CLI::IsMember({"gcd", "rank", "structural"}));
    enumerate->add_option("--max-bits", max_bits, "packed search-space cap");

    CLI::App* sample = app.add_subcommand("sample", "seeded rejection sampling of bent forms");
    sample->add_option("--e", e)->required();
    sample->add_option("--m", m)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_option("--count", count)->required();

    CLI::App* cyclotomic = app.add_subcommand("cyclotomic", "cyclotomic polynomial over GF(2)");
    cyclotomic->add_option("--d", d, "index (odd)")->required();

    CLI::App* order = app.add_subcommand("order", "multiplicative order of base mod modulus");
    order->add_option("--modulus", modulus)->required();
    order->add_option("--base", base, "defaults to 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

#ifdef _OPENMP
    if (jobs > 0) {
        omp_set_num_threads(jobs);
    }
#endif

    try {
        if (verify->parsed()) {
            return cmd_verify(e, m, coeffs, method);
        }
        if (spectrum->parsed()) {
            return cmd_spectrum(e, m, coeffs);
        }
        if (classify->parsed()) {
            return cmd_classify(e, m);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(e, m, mode, oracle, max_bits);
        }
        if (sample->parsed()) {
            return cmd_sample(e, m, seed, count);
        }
        if (cyclotomic->parsed()) {
            return cmd_cyclotomic(d);
        }
        if (order->parsed()) {
            return cmd_order(base, modulus);
        }
    } catch (const UsageError& err) {
        std::cerr << "bentqf: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& err) {
        std::cerr << "bentqf: " << err.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& err) {
        std::cerr << "bentqf: " << err.what() << "\n";
        return kExitDomain;
    } catch (const std::out_of_range& err) {
        std::cerr << "bentqf: " << err.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& err) {
        std::cerr << "bentqf: internal error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
