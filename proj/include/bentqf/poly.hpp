#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bentqf/gf2.hpp"

namespace bentqf {

/// Dense univariate polynomial over GF(2^e). Coefficient i multiplies x^i;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients
/// and its degree is nullopt rather than a number.
class Poly {
public:
    Poly() = default;
    explicit Poly(Gf2Field field) : fld_(field) {}
    Poly(Gf2Field field, std::vector<std::uint64_t> coeffs)
        : fld_(field), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Gf2Field& f) { return Poly(f); }
    static Poly one(const Gf2Field& f) { return Poly(f, {1}); }
    static Poly x_pow(const Gf2Field& f, long k);
    static Poly x_pow_n_plus_one(const Gf2Field& f, long n);  // x^n + 1

    const Gf2Field& field() const { return fld_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<long> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<long>(c_.size()) - 1;
    }
    std::uint64_t coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
    }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Exact division; throws if the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;

    bool divides(const Poly& other) const;  // this | other

    Poly monic() const;

    std::uint64_t eval(std::uint64_t point) const;

    /// Comma-separated coefficient bitmasks, lowest degree first ("1,1,1").
    /// The zero polynomial prints "0".
    std::string to_coeff_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Gf2Field fld_;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd via Euclid's algorithm. Errors when both inputs are zero.
Poly poly_gcd(Poly a, Poly b);

/// a*b mod modulus. The modulus must be nonzero of degree >= 1.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

/// The d-th cyclotomic polynomial with coefficients in the given field.
/// d must be odd (even binary cyclotomics are squares of odd ones and are
/// rejected).
Poly cyclotomic(long d, const Gf2Field& field);

/// Cyclotomic factorization x^N + 1 = prod over d | N of Q_d, N odd.
/// Returned pairs are (d, Q_d) with d ascending.
std::vector<std::pair<long, Poly>> factor_xn_plus_one(long n, const Gf2Field& field);

}  // namespace bentqf
