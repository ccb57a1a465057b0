#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "bentqf/gf2.hpp"

using namespace bentqf;

TEST_CASE("irreducibility test accepts the table and rejects composites") {
    for (int k = 1; k <= Gf2Field::kMaxTableDegree; ++k) {
        CAPTURE(k);
        CHECK(Gf2Field::is_irreducible(Gf2Field::min_irreducible(k)));
    }
    CHECK_FALSE(Gf2Field::is_irreducible(0b101));        // x^2+1 = (x+1)^2
    CHECK_FALSE(Gf2Field::is_irreducible(0b100));        // x^2
    CHECK_FALSE(Gf2Field::is_irreducible(0b10101));      // x^4+x^2+1 = (x^2+x+1)^2
    CHECK_FALSE(Gf2Field::is_irreducible(0b1100));       // x^3+x^2
    CHECK(Gf2Field::is_irreducible(0b111));              // x^2+x+1
    CHECK(Gf2Field::is_irreducible(0b10));               // x
    CHECK(Gf2Field::is_irreducible(0b11));               // x+1
}

TEST_CASE("table entries are the minimal irreducible of each degree") {
    // Exhaustive scan below the table value; affordable through degree 14.
    for (int k = 1; k <= 14; ++k) {
        CAPTURE(k);
        const std::uint64_t entry = Gf2Field::min_irreducible(k);
        const std::uint64_t lo = std::uint64_t{1} << k;
        for (std::uint64_t mask = lo; mask < entry; ++mask) {
            CAPTURE(mask);
            REQUIRE_FALSE(Gf2Field::is_irreducible(mask));
        }
    }
    CHECK_THROWS_AS(Gf2Field::min_irreducible(0), std::out_of_range);
    CHECK_THROWS_AS(Gf2Field::min_irreducible(64), std::out_of_range);
}

TEST_CASE("constructor rejects reducible or mismatched moduli") {
    CHECK_THROWS_AS(Gf2Field(2, 0b101), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Field(3, 0b111), std::invalid_argument);  // degree mismatch
    CHECK_THROWS_AS(Gf2Field(0, 0b11), std::invalid_argument);
    CHECK_THROWS_AS(Gf2Field(64, 0), std::invalid_argument);
    CHECK(Gf2Field(3, 0b1011).order() == 8);
}

TEST_CASE("GF(8) multiplicative structure") {
    const Gf2Field f = Gf2Field::with_default_modulus(3);  // x^3 + x + 1
    CHECK(f.order() == 8);
    // x * x^2 = x^3 = x + 1 under the modulus
    CHECK(f.mul(0b010, 0b100) == 0b011);
    for (std::uint64_t a = 1; a < 8; ++a) {
        CAPTURE(a);
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, 7) == 1);             // group order divides 2^3 - 1
        CHECK(f.sqr(a) == f.mul(a, a));
        CHECK(f.pow(a, 0) == 1);
    }
    CHECK(f.mul(0, 5) == 0);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    // Frobenius is additive: (a+b)^2 = a^2 + b^2
    for (std::uint64_t a = 0; a < 8; ++a) {
        for (std::uint64_t b = 0; b < 8; ++b) {
            CHECK(f.sqr(a ^ b) == (f.sqr(a) ^ f.sqr(b)));
        }
    }
    // frobenius(a, k) is the identity on GF(2^k)
    for (std::uint64_t a = 0; a < 8; ++a) {
        CHECK(f.frobenius(a, 3) == a);
        CHECK(f.frobenius(a, 1) == f.sqr(a));
    }
}

TEST_CASE("absolute trace is linear, Frobenius-invariant, and balanced") {
    for (const int k : {1, 2, 3, 6, 9}) {
        CAPTURE(k);
        const Gf2Field f = Gf2Field::with_default_modulus(k);
        std::uint64_t zeros = 0;
        for (std::uint64_t a = 0; a < f.order(); ++a) {
            const int t = f.trace_bit(a);
            REQUIRE((t == 0 || t == 1));
            if (t == 0) ++zeros;
            CHECK(f.trace_bit(f.sqr(a)) == t);
        }
        CHECK(zeros == f.order() / 2);  // trace is onto GF(2), kernel a hyperplane
        std::mt19937_64 rng(99);
        for (int i = 0; i < 64; ++i) {
            const std::uint64_t a = rng() & (f.order() - 1);
            const std::uint64_t b = rng() & (f.order() - 1);
            CHECK(f.trace_bit(a ^ b) == (f.trace_bit(a) ^ f.trace_bit(b)));
        }
    }
    // In GF(8), Tr(1) = 3 mod 2 = 1.
    CHECK(Gf2Field::with_default_modulus(3).trace_bit(1) == 1);
    CHECK(Gf2Field::with_default_modulus(6).trace_bit(1) == 0);
}

TEST_CASE("context embedding GF(8) -> GF(2^18) is a field homomorphism") {
    const ContextPtr ctx = make_context(3, 6);
    CHECK(ctx->e() == 3);
    CHECK(ctx->m() == 6);
    CHECK(ctx->n() == 18);
    const Gf2Field& small = ctx->small_field();
    const Gf2Field& big = ctx->big_field();
    CHECK(ctx->embed(0) == 0);
    CHECK(ctx->embed(1) == 1);
    for (std::uint64_t a = 0; a < 8; ++a) {
        for (std::uint64_t b = 0; b < 8; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(ctx->embed(a ^ b) == (ctx->embed(a) ^ ctx->embed(b)));
            CHECK(ctx->embed(small.mul(a, b)) == big.mul(ctx->embed(a), ctx->embed(b)));
        }
    }
    // Injective on all 8 elements.
    for (std::uint64_t a = 0; a < 8; ++a) {
        for (std::uint64_t b = a + 1; b < 8; ++b) {
            CHECK(ctx->embed(a) != ctx->embed(b));
        }
    }
    // The embedded generator is a root of the small field's modulus and is
    // fixed by the e-fold Frobenius.
    const std::uint64_t r = ctx->embed_root();
    std::uint64_t acc = 0;
    std::uint64_t mod = small.modulus();
    for (int j = 0; mod; ++j, mod >>= 1) {
        if (mod & 1) acc ^= big.pow(r, static_cast<std::uint64_t>(j));
    }
    CHECK(acc == 0);
    CHECK(big.frobenius(r, 3) == r);
}

TEST_CASE("relative trace lands in the subfield copy and converts back") {
    const ContextPtr ctx = make_context(3, 6);
    const Gf2Field& big = ctx->big_field();
    const Gf2Field small = Gf2Field::with_default_modulus(3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t x = rng() & (big.order() - 1);
        const std::uint64_t t = ctx->trace_to_copy(x, 3);
        CHECK(big.frobenius(t, 3) == t);  // fixed by Frobenius^3
        // Transitivity: Tr^18_1 = Tr^3_1 after Tr^18_3.
        CHECK(ctx->trace_bit(x) == small.trace_bit(ctx->trace(x, 3)));
    }
    // Tr^n_n is the identity.
    for (std::uint64_t a = 0; a < 8; ++a) {
        CHECK(ctx->trace_to_copy(ctx->embed(a), 18) == ctx->embed(a));
    }
    CHECK_THROWS_AS(ctx->trace_to_copy(1, 5), std::invalid_argument);  // 5 does not divide 18
}

TEST_CASE("subfield coordinates invert the embedding on the copy") {
    // trace(x, e) expresses Tr^n_e(x) in GF(2^e) coordinates, so embedding
    // it again must give back trace_to_copy(x, e).
    for (const auto& [e, m] : {std::pair{1, 6}, {2, 4}, {3, 6}, {4, 4}, {3, 10}}) {
        CAPTURE(e);
        CAPTURE(m);
        const ContextPtr ctx = make_context(e, m);
        std::mt19937_64 rng(static_cast<std::uint64_t>(e * 100 + m));
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t x = rng() & (ctx->big_field().order() - 1);
            CHECK(ctx->embed(ctx->trace(x, e)) == ctx->trace_to_copy(x, e));
        }
    }
}

TEST_CASE("context construction validates its arguments") {
    CHECK_THROWS_AS(make_context(0, 6), std::invalid_argument);
    CHECK_THROWS_AS(make_context(17, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_context(1, 5), std::invalid_argument);   // odd m
    CHECK_THROWS_AS(make_context(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_context(16, 4), std::out_of_range);      // n = 64 over the word cap
    CHECK(make_context(1, 2)->n() == 2);
    CHECK(make_context(15, 4)->n() == 60);
}
