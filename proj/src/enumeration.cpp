#include "bentqf/enumeration.hpp"

#include <random>
#include <stdexcept>

#include "bentqf/intmath.hpp"
#include "bentqf/kernels.hpp"

namespace bentqf {

std::string to_string(OracleKind oracle) {
    switch (oracle) {
        case OracleKind::Gcd: return "gcd";
        case OracleKind::Rank: return "rank";
        case OracleKind::Structural: return "structural";
    }
    return "gcd";
}

BigInt count_formula(const ParamClass& cls) {
    if (cls.kind == ParamKind::Unsupported) {
        throw std::domain_error("count_formula: no closed form for this class (" +
                                cls.failed_condition + ")");
    }
    const long e = cls.e;
    std::vector<long> exps;
    if (cls.kind == ParamKind::PR) {
        for (int i = 1; i <= cls.r; ++i) {
            exps.push_back(e * ((ipow(cls.p, i) - ipow(cls.p, i - 1)) / 2));
        }
    } else {
        exps.push_back(e * (cls.p - 1) / 2);
        exps.push_back(e * (cls.q - 1) / 2);
        exps.push_back(e * (cls.p - 1) * (cls.q - 1) / 2);
    }
    long lead = e * (cls.m - 2) / 2;
    BigInt out = (BigInt(1) << e) - 1;
    for (const long exp : exps) {
        out *= (BigInt(1) << exp) - 1;
        lead -= exp;
    }
    if (lead < 0) {
        throw std::logic_error("count_formula: exponent bookkeeping went negative");
    }
    out <<= lead;
    return out;
}

namespace {

int checked_bits(int e, long m, int max_bits) {
    const int bits = e * static_cast<int>(m / 2);
    if (max_bits < 1 || max_bits > 62) {
        throw std::invalid_argument("count_exhaustive: cap must be in [1, 62]");
    }
    if (bits > max_bits) {
        throw std::domain_error("count_exhaustive: search space exceeds the cap");
    }
    return bits;
}

}  // namespace

std::uint64_t count_exhaustive(int e, long m, OracleKind oracle, int max_bits) {
    const int bits = checked_bits(e, m, max_bits);
    ContextPtr ctx = make_context(e, static_cast<int>(m));
    const std::uint64_t space = std::uint64_t{1} << bits;
    std::uint64_t total = 0;
    if (oracle == OracleKind::Rank) {
        const RankSweepTable table(ctx);
#pragma omp parallel for schedule(static) reduction(+ : total)
        for (std::uint64_t packed = 0; packed < space; ++packed) {
            total += table.is_bent(packed) ? 1 : 0;
        }
        return total;
    }
    ParamClass cls;
    if (oracle == OracleKind::Structural) {
        cls = classify(e, m);
        if (cls.kind == ParamKind::Unsupported) {
            throw std::domain_error("count_exhaustive: structural oracle needs a supported class (" +
                                    cls.failed_condition + ")");
        }
    }
#pragma omp parallel
    {
        QuadForm f(ctx, std::vector<std::uint64_t>(static_cast<std::size_t>(m / 2), 0));
        std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
        for (std::uint64_t packed = 0; packed < space; ++packed) {
            f.set_packed(packed);
            bool bent = false;
            if (oracle == OracleKind::Gcd) {
                bent = is_bent_gcd(f).bent;
            } else if (cls.kind == ParamKind::PR) {
                bent = check_pr(f, cls);
            } else {
                bent = check_pq(f, cls);
            }
            local += bent ? 1 : 0;
        }
#pragma omp atomic
        total += local;
    }
    return total;
}

std::uint64_t count_exhaustive_serial(int e, long m, OracleKind oracle, int max_bits) {
    const int bits = checked_bits(e, m, max_bits);
    ContextPtr ctx = make_context(e, static_cast<int>(m));
    const std::uint64_t space = std::uint64_t{1} << bits;
    ParamClass cls;
    if (oracle == OracleKind::Structural) {
        cls = classify(e, m);
        if (cls.kind == ParamKind::Unsupported) {
            throw std::domain_error("count_exhaustive: structural oracle needs a supported class (" +
                                    cls.failed_condition + ")");
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t packed = 0; packed < space; ++packed) {
        const QuadForm f = QuadForm::from_packed(ctx, packed);
        bool bent = false;
        switch (oracle) {
            case OracleKind::Gcd: bent = is_bent_gcd(f).bent; break;
            case OracleKind::Rank: bent = is_bent_rank(f); break;
            case OracleKind::Structural:
                bent = cls.kind == ParamKind::PR ? check_pr(f, cls) : check_pq(f, cls);
                break;
        }
        total += bent ? 1 : 0;
    }
    return total;
}

std::vector<QuadForm> sample_bent(int e, long m, std::uint64_t seed, std::size_t count,
                                  SampleStats* stats) {
    ContextPtr ctx = make_context(e, static_cast<int>(m));
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = (std::uint64_t{1} << e) - 1;
    const auto half = static_cast<std::size_t>(m / 2);
    std::vector<std::uint64_t> coeffs(half, 0);
    std::vector<QuadForm> out;
    out.reserve(count);
    SampleStats tally;
    while (out.size() < count) {
        for (std::size_t i = 0; i + 1 < half; ++i) {
            coeffs[i] = rng() & mask;
        }
        do {
            coeffs[half - 1] = rng() & mask;
        } while (coeffs[half - 1] == 0);
        ++tally.draws;
        QuadForm f(ctx, coeffs);
        if (is_bent_gcd(f).bent) {
            ++tally.accepted;
            out.push_back(std::move(f));
        }
    }
    if (stats != nullptr) {
        *stats = tally;
    }
    return out;
}

CountReport make_count_report(int e, long m, bool with_formula, bool with_exhaustive,
                              OracleKind oracle, int max_bits) {
    CountReport report;
    report.cls = classify(e, m);
    report.space = BigInt(1) << (e * (m / 2));
    if (with_formula) {
        report.formula = count_formula(report.cls);
    }
    if (with_exhaustive) {
        report.exhaustive = count_exhaustive(e, m, oracle, max_bits);
    }
    return report;
}

}  // namespace bentqf
