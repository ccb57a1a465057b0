#include "bentqf/quadform.hpp"

#include <stdexcept>
#include <utility>

namespace bentqf {

QuadForm::QuadForm(ContextPtr ctx, std::vector<std::uint64_t> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (!ctx_) {
        throw std::invalid_argument("QuadForm: null context");
    }
    const auto expected = static_cast<std::size_t>(ctx_->m() / 2);
    if (coeffs_.size() != expected) {
        throw std::invalid_argument("QuadForm: expected m/2 coefficients");
    }
    for (const std::uint64_t c : coeffs_) {
        if (!ctx_->small_field().contains(c)) {
            throw std::domain_error("QuadForm: coefficient outside GF(2^e)");
        }
    }
    refresh_embedded();
}

QuadForm QuadForm::from_packed(ContextPtr ctx, std::uint64_t packed) {
    if (!ctx) {
        throw std::invalid_argument("QuadForm: null context");
    }
    const auto half = static_cast<std::size_t>(ctx->m() / 2);
    QuadForm f(std::move(ctx), std::vector<std::uint64_t>(half, 0));
    f.set_packed(packed);
    return f;
}

void QuadForm::set_packed(std::uint64_t packed) {
    const int e = ctx_->e();
    const int half = ctx_->m() / 2;
    const int bits = e * half;
    if (bits > 64) {
        throw std::invalid_argument("QuadForm: packed coefficient space exceeds 64 bits");
    }
    if (bits < 64 && (packed >> bits) != 0) {
        throw std::domain_error("QuadForm: packed value out of range");
    }
    const std::uint64_t chunk_mask = (std::uint64_t{1} << e) - 1;
    for (int i = 0; i < half; ++i) {
        coeffs_[static_cast<std::size_t>(i)] = (packed >> (e * i)) & chunk_mask;
    }
    refresh_embedded();
}

std::uint64_t QuadForm::to_packed() const {
    const int e = ctx_->e();
    const int half = ctx_->m() / 2;
    if (e * half > 64) {
        throw std::invalid_argument("QuadForm: packed coefficient space exceeds 64 bits");
    }
    std::uint64_t packed = 0;
    for (int i = 0; i < half; ++i) {
        packed |= coeffs_[static_cast<std::size_t>(i)] << (e * i);
    }
    return packed;
}

void QuadForm::refresh_embedded() {
    embedded_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        embedded_[i] = ctx_->embed(coeffs_[i]);
    }
}

namespace {

/// Absolute trace of the degree-d subfield, taken on an element already
/// known to lie in that subfield's copy: sum of the first d conjugates.
/// The result is an element of GF(2), encoded 0 or 1.
int subfield_trace_bit(const Gf2Field& field, std::uint64_t u, int d) {
    std::uint64_t t = 0;
    for (int j = 0; j < d; ++j) {
        t ^= u;
        u = field.sqr(u);
    }
    return static_cast<int>(t & 1);
}

}  // namespace

int QuadForm::evaluate(std::uint64_t x) const {
    const Gf2Field& field = ctx_->big_field();
    if (!field.contains(x)) {
        throw std::domain_error("QuadForm: point outside GF(2^n)");
    }
    const int e = ctx_->e();
    const int half = ctx_->m() / 2;
    int acc = 0;
    std::uint64_t pw = field.frobenius(x, e);  // x^(2^(e*i)), starting at i = 1
    for (int i = 1; i < half; ++i) {
        acc ^= field.trace_bit(field.mul(embedded_[static_cast<std::size_t>(i) - 1],
                                         field.mul(x, pw)));
        pw = field.frobenius(pw, e);
    }
    // pw is now x^(2^(n/2)). The closing term c_{m/2} x^(1+2^(n/2)) lies in
    // the half-degree subfield and takes that subfield's absolute trace.
    const std::uint64_t u =
        field.mul(embedded_[static_cast<std::size_t>(half) - 1], field.mul(x, pw));
    acc ^= subfield_trace_bit(field, u, ctx_->n() / 2);
    return acc;
}

GeneralQuadForm::GeneralQuadForm(Gf2Field field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    const int n = field_.degree();
    const std::size_t expected =
        n % 2 == 0 ? static_cast<std::size_t>(n / 2) + 1 : static_cast<std::size_t>((n + 1) / 2);
    if (coeffs_.size() != expected) {
        throw std::invalid_argument("GeneralQuadForm: wrong coefficient count");
    }
    for (const std::uint64_t c : coeffs_) {
        if (!field_.contains(c)) {
            throw std::domain_error("GeneralQuadForm: coefficient outside GF(2^n)");
        }
    }
    if (n % 2 == 0) {
        const std::uint64_t last = coeffs_.back();
        if (field_.frobenius(last, n / 2) != last) {
            throw std::domain_error(
                "GeneralQuadForm: closing coefficient must lie in the half-degree subfield");
        }
    }
}

GeneralQuadForm GeneralQuadForm::random(const Gf2Field& field, std::mt19937_64& rng) {
    const int n = field.degree();
    const std::uint64_t mask = field.order() - 1;
    const int plain = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(static_cast<std::size_t>(plain) + (n % 2 == 0 ? 1 : 0));
    // Low-bit slices of mt19937_64 outputs, not std::uniform_int_distribution,
    // so the draw sequence is identical across standard libraries.
    for (int i = 0; i < plain; ++i) {
        coeffs.push_back(rng() & mask);
    }
    if (n % 2 == 0) {
        // t + t^(2^(n/2)) is the relative trace onto the half-degree
        // subfield, which it maps onto surjectively.
        const std::uint64_t t = rng() & mask;
        coeffs.push_back(t ^ field.frobenius(t, n / 2));
    }
    return GeneralQuadForm(field, std::move(coeffs));
}

int GeneralQuadForm::evaluate(std::uint64_t x) const {
    const Gf2Field& field = field_;
    if (!field.contains(x)) {
        throw std::domain_error("GeneralQuadForm: point outside GF(2^n)");
    }
    const int n = field.degree();
    const int plain = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    int acc = 0;
    std::uint64_t pw = x;  // x^(2^i)
    for (int i = 0; i < plain; ++i) {
        acc ^= field.trace_bit(
            field.mul(coeffs_[static_cast<std::size_t>(i)], field.mul(x, pw)));
        pw = field.sqr(pw);
    }
    if (n % 2 == 0) {
        // pw is now x^(2^(n/2)); same half-degree subfield trace as above.
        const std::uint64_t u = field.mul(coeffs_.back(), field.mul(x, pw));
        acc ^= subfield_trace_bit(field, u, n / 2);
    }
    return acc;
}

Poly build_cf(const QuadForm& f) {
    const FieldContext& ctx = f.ctx();
    const int m = ctx.m();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= m / 2 - 1; ++i) {
        c[static_cast<std::size_t>(i)] ^= f.c(i);
        c[static_cast<std::size_t>(m - i)] ^= f.c(i);
    }
    c[static_cast<std::size_t>(m) / 2] ^= f.c(m / 2);
    return Poly(ctx.small_field(), std::move(c));
}

GcdVerdict is_bent_gcd(const QuadForm& f) {
    const Gf2Field& field = f.ctx().small_field();
    const Poly cf = build_cf(f);
    const Poly modulus = Poly::x_pow_n_plus_one(field, f.ctx().m());
    Poly g = poly_gcd(cf, modulus);
    const bool bent = g.is_one();
    return GcdVerdict{bent, std::move(g)};
}

}  // namespace bentqf
