// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Tolerances and runtime budgets are pinned here in code so a
// regression shows up as a failed line, not a silent slowdown.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bentqf/criteria.hpp"
#include "bentqf/enumeration.hpp"
#include "bentqf/intmath.hpp"
#include "bentqf/kernels.hpp"
#include "bentqf/poly.hpp"
#include "bentqf/quadform.hpp"

using namespace bentqf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Criterion 1: gcd, rank and spectral verdicts coincide on every coefficient
// vector at (1, 6) and (1, 12). Budget: under one second.
Outcome criterion_oracle_triangle() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    for (const int m : {6, 12}) {
        const ContextPtr ctx = make_context(1, m);
        QuadForm f(ctx, std::vector<std::uint64_t>(static_cast<std::size_t>(m / 2), 0));
        for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << (m / 2)); ++packed) {
            f.set_packed(packed);
            const bool gcd = is_bent_gcd(f).bent;
            const bool rank = is_bent_rank(f);
            const bool spectral = is_bent_spectral(f);
            if (gcd != rank || gcd != spectral) {
                outcome.fail("verdicts diverge at m=" + std::to_string(m) +
                             " packed=" + std::to_string(packed));
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        outcome.fail("runtime " + std::to_string(elapsed) + " s exceeds the 1 s budget");
    }
    return outcome;
}

// Criterion 2: the closed-form counts equal the exhaustive gcd sweeps on all
// six published values. Budget: under thirty seconds total.
Outcome criterion_count_reproduction() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::tuple<int, long, std::uint64_t>> expected{
        {1, 6, 2}, {1, 10, 12}, {1, 12, 16}, {1, 18, 112}, {3, 6, 392}, {1, 30, 5760}};
    for (const auto& [e, m, want] : expected) {
        const BigInt formula = count_formula(classify(e, m));
        const std::uint64_t swept = count_exhaustive(e, m, OracleKind::Gcd);
        if (formula != want || swept != want) {
            outcome.fail("(" + std::to_string(e) + ", " + std::to_string(m) + ") gave formula=" +
                         formula.str() + " exhaustive=" + std::to_string(swept) + ", want " +
                         std::to_string(want));
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        outcome.fail("runtime " + std::to_string(elapsed) + " s exceeds the 30 s budget");
    }
    return outcome;
}

// Criterion 3: the level-decomposed structural test equals the gcd oracle on
// all vectors at (1, 18) (p = 3, r = 2) and (3, 6).
Outcome criterion_structural_pr() {
    Outcome outcome;
    for (const auto& [e, m] : std::vector<std::pair<int, long>>{{1, 18}, {3, 6}}) {
        const ParamClass cls = classify(e, m);
        if (cls.kind != ParamKind::PR) {
            outcome.fail("classify rejected a test class");
            continue;
        }
        const ContextPtr ctx = make_context(e, static_cast<int>(m));
        QuadForm f(ctx, std::vector<std::uint64_t>(static_cast<std::size_t>(m / 2), 0));
        const int bits = e * static_cast<int>(m) / 2;
        for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << bits); ++packed) {
            f.set_packed(packed);
            if (check_pr(f, cls) != is_bent_gcd(f).bent) {
                outcome.fail("(" + std::to_string(e) + ", " + std::to_string(m) +
                             ") mismatch at packed=" + std::to_string(packed));
            }
        }
    }
    return outcome;
}

// Criterion 4: the two-prime structural test equals the gcd oracle on all
// 2^15 vectors at (1, 30), cross-checked by per-form rank elimination.
// Budget: under two minutes.
Outcome criterion_structural_pq() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    const ParamClass cls = classify(1, 30);
    const ContextPtr ctx = make_context(1, 30);
    QuadForm f(ctx, std::vector<std::uint64_t>(15, 0));
    for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << 15); ++packed) {
        f.set_packed(packed);
        const bool structural = check_pq(f, cls);
        const bool gcd = is_bent_gcd(f).bent;
        const bool rank = is_bent_rank(f);
        if (structural != gcd || structural != rank) {
            outcome.fail("mismatch at packed=" + std::to_string(packed));
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0) {
        outcome.fail("runtime " + std::to_string(elapsed) + " s exceeds the 120 s budget");
    }
    return outcome;
}

// Criterion 5: 200 random general quadratics at each n in {6, 8, 9, 12}
// reproduce the predicted three-valued spectrum, with k_f parity matching n.
Outcome criterion_vd_distribution() {
    Outcome outcome;
    std::mt19937_64 rng(20260814);
    for (const int n : {6, 8, 9, 12}) {
        const Gf2Field field = Gf2Field::with_default_modulus(n);
        for (int trial = 0; trial < 200; ++trial) {
            const GeneralQuadForm f = GeneralQuadForm::random(field, rng);
            if (!check_vd_distribution(f)) {
                outcome.fail("distribution check failed at n=" + std::to_string(n) +
                             " trial=" + std::to_string(trial));
            }
            if ((kernel_dimension(f) - n) % 2 != 0) {
                outcome.fail("k_f parity broke at n=" + std::to_string(n));
            }
        }
    }
    return outcome;
}

// Criterion 6: cyclotomic factorization reassembles x^N + 1 for every odd
// N up to 1000, with each factor's degree equal to Euler phi.
Outcome criterion_cyclotomic_consistency() {
    Outcome outcome;
    const Gf2Field f2 = Gf2Field::with_default_modulus(1);
    for (long n = 1; n <= 1000; n += 2) {
        Poly product = Poly::one(f2);
        for (const auto& [d, qd] : factor_xn_plus_one(n, f2)) {
            if (qd.degree() != euler_phi(d)) {
                outcome.fail("deg Q_" + std::to_string(d) + " != phi(d) at N=" + std::to_string(n));
            }
            product = product * qd;
        }
        if (!(product == Poly::x_pow_n_plus_one(f2, n))) {
            outcome.fail("product != x^N + 1 at N=" + std::to_string(n));
        }
    }
    return outcome;
}

// Criterion 7: gcd(c_f, Q_{p^r}) is 1 or the full cyclotomic, never a proper
// divisor, over ten thousand random forms at (1, 18) and (1, 30).
Outcome criterion_gcd_dichotomy() {
    Outcome outcome;
    const Gf2Field f2 = Gf2Field::with_default_modulus(1);
    std::mt19937_64 rng(424242);
    const auto run = [&](int m, long d) {
        const ContextPtr ctx = make_context(1, m);
        const Poly q = cyclotomic(d, f2);
        QuadForm f(ctx, std::vector<std::uint64_t>(static_cast<std::size_t>(m / 2), 0));
        const std::uint64_t mask = (std::uint64_t{1} << (m / 2)) - 1;
        for (int trial = 0; trial < 10000; ++trial) {
            f.set_packed(rng() & mask);
            const Poly cf = build_cf(f);
            if (cf.is_zero()) {
                continue;  // gcd(0, Q_d) is Q_d, allowed but uninformative
            }
            const Poly g = poly_gcd(cf, q);
            if (!g.is_one() && !(g == q)) {
                outcome.fail("proper divisor " + g.to_coeff_string() + " at m=" +
                             std::to_string(m));
            }
        }
    };
    run(18, 9);
    run(30, 15);
    return outcome;
}

// Criterion 8: 100 sampled bent functions at (3, 6) all re-verify under the
// rank and gcd oracles, and the acceptance rate sits within three binomial
// standard errors of the true density 392/448.
Outcome criterion_sampler_soundness() {
    Outcome outcome;
    SampleStats stats;
    const auto batch = sample_bent(3, 6, 20260814, 100, &stats);
    for (const QuadForm& f : batch) {
        if (!is_bent_gcd(f).bent || !is_bent_rank(f)) {
            outcome.fail("a sampled function failed re-verification");
        }
    }
    const double p = 392.0 / 448.0;
    const double rate = static_cast<double>(stats.accepted) / static_cast<double>(stats.draws);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(stats.draws));
    if (std::abs(rate - p) >= 3.0 * sigma) {
        outcome.fail("acceptance rate " + std::to_string(rate) + " outside 3 sigma of " +
                     std::to_string(p));
    }
    return outcome;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"oracle triangle exhaustive at (1,6) and (1,12)", criterion_oracle_triangle},
        {"formula counts reproduce exhaustive sweeps on six classes",
         criterion_count_reproduction},
        {"structural test equals gcd at (1,18) and (3,6)", criterion_structural_pr},
        {"two-prime test equals gcd and rank over all of (1,30)", criterion_structural_pq},
        {"spectrum distribution holds for 200 draws at n=6,8,9,12",
         criterion_vd_distribution},
        {"cyclotomic factors reassemble x^N+1 for odd N <= 1000",
         criterion_cyclotomic_consistency},
        {"gcd with the top cyclotomic is all or nothing over 10^4 draws",
         criterion_gcd_dichotomy},
        {"sampler output re-verifies and its rate matches 392/448",
         criterion_sampler_soundness},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = criteria[i].second();
        const double elapsed = seconds_since(start);
        if (outcome.ok) {
            std::printf("PASS criterion %zu: %s [%.2f s]\n", i + 1, criteria[i].first.c_str(),
                        elapsed);
        } else {
            std::printf("FAIL criterion %zu: %s: %s [%.2f s]\n", i + 1,
                        criteria[i].first.c_str(), outcome.detail.c_str(), elapsed);
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
