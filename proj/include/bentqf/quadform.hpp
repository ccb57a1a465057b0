#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "bentqf/gf2.hpp"
#include "bentqf/poly.hpp"

namespace bentqf {

/// The trace form f(x) = sum_{i=1}^{m/2-1} Tr^n_1(c_i x^(1+2^(e*i)))
///                       + Tr^(n/2)_1(c_{m/2} x^(1+2^(n/2)))
/// with coefficients c_i in GF(2^e), evaluated over GF(2^n), n = e*m.
class QuadForm {
public:
    QuadForm(ContextPtr ctx, std::vector<std::uint64_t> coeffs);

    /// Coefficients packed e bits each, c_1 in the lowest chunk.
    static QuadForm from_packed(ContextPtr ctx, std::uint64_t packed);
    void set_packed(std::uint64_t packed);
    std::uint64_t to_packed() const;

    const FieldContext& ctx() const { return *ctx_; }
    ContextPtr ctx_ptr() const { return ctx_; }
    int dimension() const { return ctx_->n(); }
    const Gf2Field& field() const { return ctx_->big_field(); }

    /// 1-based coefficient access, i in [1, m/2].
    std::uint64_t c(int i) const { return coeffs_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    int evaluate(std::uint64_t x) const;

private:
    void refresh_embedded();

    ContextPtr ctx_;
    std::vector<std::uint64_t> coeffs_;    // c_1 .. c_{m/2} in GF(2^e)
    std::vector<std::uint64_t> embedded_;  // the same, embedded into GF(2^n)
};

/// A general quadratic Boolean function over GF(2^n), any n >= 1:
///   even n: f(x) = sum_{i=0}^{n/2-1} Tr^n_1(c_i x^(1+2^i)) + Tr^(n/2)_1(c_{n/2} x^(1+2^(n/2)))
///   odd n:  f(x) = sum_{i=0}^{(n-1)/2} Tr^n_1(c_i x^(1+2^i))
/// with c_i in GF(2^n) and, for even n, c_{n/2} in the GF(2^(n/2)) subfield.
/// Exists to exercise the spectrum-distribution theorem on arbitrary
/// quadratics; the gcd machinery applies only to QuadForm.
class GeneralQuadForm {
public:
    GeneralQuadForm(Gf2Field field, std::vector<std::uint64_t> coeffs);

    static GeneralQuadForm random(const Gf2Field& field, std::mt19937_64& rng);

    const Gf2Field& field() const { return field_; }
    int dimension() const { return field_.degree(); }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    int evaluate(std::uint64_t x) const;

private:
    Gf2Field field_;
    std::vector<std::uint64_t> coeffs_;
};

/// The associated polynomial over GF(2^e):
/// c_f(x) = sum_{i=1}^{m/2-1} c_i (x^i + x^(m-i)) + c_{m/2} x^(m/2).
Poly build_cf(const QuadForm& f);

struct GcdVerdict {
    bool bent;
    Poly certificate;  // gcd(c_f, x^m + 1), monic
};

/// Bent iff gcd(c_f(x), x^m + 1) = 1.
GcdVerdict is_bent_gcd(const QuadForm& f);

/// Multiset of Hadamard transform values with multiplicities. k_f is
/// recovered from the largest magnitude (the three-valued spectrum shape);
/// the λ-indexing is not part of the contract, only the multiset is.
struct SpectrumSummary {
    int n = 0;
    int k_f = 0;
    std::map<std::int64_t, std::uint64_t> values;
};

inline constexpr int kSpectralCapN = 30;      // hard limit for transforms
inline constexpr int kSpectralDefaultCapN = 24;  // default working cap for sweeps

}  // namespace bentqf
