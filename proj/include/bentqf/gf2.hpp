#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace bentqf {

/// Arithmetic in GF(2^k), polynomial basis. An element is a bitmask whose
/// bit j is the coefficient of alpha^j, where alpha is a root of the
/// defining polynomial. Addition is XOR; multiplication reduces modulo the
/// defining polynomial. Supports 1 <= k <= 63.
class Gf2Field {
public:
    Gf2Field() = default;

    /// Builds GF(2^k) with an explicit defining polynomial (bitmask, bit k set).
    /// Throws if the polynomial is not irreducible of the claimed degree.
    Gf2Field(int degree, std::uint64_t modulus);

    /// Builds GF(2^k) from the built-in table of defining polynomials
    /// (the smallest-bitmask irreducible polynomial of each degree).
    static Gf2Field with_default_modulus(int degree);

    /// Table lookup: smallest-bitmask irreducible polynomial of the given
    /// degree over GF(2). Throws if the degree is outside the table.
    static std::uint64_t min_irreducible(int degree);
    static constexpr int kMaxTableDegree = 63;

    static bool is_irreducible(std::uint64_t poly_mask);

    int degree() const { return k_; }
    std::uint64_t modulus() const { return mod_; }
    std::uint64_t order() const { return std::uint64_t{1} << k_; }
    bool contains(std::uint64_t a) const { return k_ >= 64 || (a >> k_) == 0; }

    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a ^ b; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0;
        const std::uint64_t top = std::uint64_t{1} << k_;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= mod_;
        }
        return r;
    }

    std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }

    /// a^(2^j); j is reduced modulo k since Frobenius has order k.
    std::uint64_t frobenius(std::uint64_t a, int j) const {
        j %= k_;
        if (j < 0) j += k_;
        for (int i = 0; i < j; ++i) a = sqr(a);
        return a;
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t exp) const;

    /// Multiplicative inverse; throws on zero.
    std::uint64_t inv(std::uint64_t a) const;

    /// Absolute trace to GF(2), as a bit. Precomputed linear functional.
    int trace_bit(std::uint64_t a) const {
        return __builtin_parityll(a & trace_mask_);
    }

    bool operator==(const Gf2Field& o) const { return k_ == o.k_ && mod_ == o.mod_; }

private:
    int k_ = 0;
    std::uint64_t mod_ = 0;
    std::uint64_t trace_mask_ = 0;
};

/// GF(2^e) and GF(2^n) with n = e*m, together with the embedding
/// GF(2^e) -> GF(2^n) induced by the smallest-encoding root of the small
/// field's defining polynomial inside the big field. Immutable after
/// construction; safe to share across threads.
class FieldContext {
public:
    static constexpr int kSubfieldCap = 16;  // largest proper-subfield degree with a precomputed basis map

    FieldContext(int e, int m);

    int e() const { return e_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const Gf2Field& small_field() const { return small_; }
    const Gf2Field& big_field() const { return big_; }
    std::uint64_t embed_root() const { return embed_root_; }

    /// GF(2^e) -> GF(2^n), a |-> sum over set bits j of a of embed_root^j.
    std::uint64_t embed(std::uint64_t a) const {
        std::uint64_t r = 0;
        for (int j = 0; a; ++j, a >>= 1)
            if (a & 1) r ^= embed_pow_[j];
        return r;
    }

    std::uint64_t frobenius(std::uint64_t x, int j) const { return big_.frobenius(x, j); }

    /// x + x^(2^d) + ... + x^(2^(d*(n/d-1))): the trace onto the GF(2^d)
    /// subfield copy inside GF(2^n). Requires d | n.
    std::uint64_t trace_to_copy(std::uint64_t x, int d) const;

    /// Trace of x down to GF(2^d), returned in that field's own polynomial
    /// basis. Requires d | n and d <= kSubfieldCap (or d == n, d == 1).
    std::uint64_t trace(std::uint64_t x, int d) const;

    /// Tr^n_1 as a bit; the hot-path special case of trace().
    int trace_bit(std::uint64_t x) const { return big_.trace_bit(x); }

private:
    struct SubfieldMap {
        int d = 0;
        std::uint64_t root = 0;
        std::vector<std::uint64_t> root_pow;  // root^j, j < d
        std::vector<std::uint64_t> coord;     // coord[j]: bit j of preimage = parity(T & coord[j])
    };

    const SubfieldMap* find_map(int d) const;
    static SubfieldMap build_subfield_map(const Gf2Field& big, int d);

    int e_, m_, n_;
    Gf2Field small_;
    Gf2Field big_;
    std::uint64_t embed_root_ = 0;
    std::vector<std::uint64_t> embed_pow_;
    std::vector<SubfieldMap> submaps_;
};

using ContextPtr = std::shared_ptr<const FieldContext>;

/// Validates (e, m) and builds the shared context. m must be even and >= 2;
/// e*m must be within the defining-polynomial table.
ContextPtr make_context(int e, int m);

}  // namespace bentqf
