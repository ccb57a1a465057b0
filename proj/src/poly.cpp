#include "bentqf/poly.hpp"

#include <map>
#include <stdexcept>

#include "bentqf/intmath.hpp"

namespace bentqf {

Poly Poly::x_pow(const Gf2Field& f, long k) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    return Poly(f, std::move(c));
}

Poly Poly::x_pow_n_plus_one(const Gf2Field& f, long n) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c.front() = 1;
    c.back() = 1;
    return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (i < c_.size() ? c_[i] : 0) ^ (i < o.c_.size() ? o.c_[i] : 0);
    return Poly(fld_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(fld_);
    std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] ^= fld_.mul(c_[i], o.c_[j]);
    }
    return Poly(fld_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    if (is_zero() || c_.size() < divisor.c_.size()) return {Poly(fld_), *this};

    const std::uint64_t lead_inv = fld_.inv(divisor.leading());
    std::vector<std::uint64_t> rem = c_;
    std::vector<std::uint64_t> quot(c_.size() - divisor.c_.size() + 1, 0);
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const std::uint64_t top = rem[shift + divisor.c_.size() - 1];
        if (top == 0) continue;
        const std::uint64_t q = fld_.mul(top, lead_inv);
        quot[shift] = q;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j)
            rem[shift + j] ^= fld_.mul(q, divisor.c_[j]);
    }
    return {Poly(fld_, std::move(quot)), Poly(fld_, std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::invalid_argument("Poly::exact_div: division is not exact");
    return q;
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    const std::uint64_t inv = fld_.inv(leading());
    std::vector<std::uint64_t> c = c_;
    for (auto& v : c) v = fld_.mul(v, inv);
    return Poly(fld_, std::move(c));
}

std::uint64_t Poly::eval(std::uint64_t point) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = fld_.mul(acc, point) ^ c_[i];
    return acc;
}

std::string Poly::to_coeff_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c_[i]);
    }
    return s;
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw std::invalid_argument("mulmod: modulus must have degree >= 1");
    return (a * b).divmod(modulus).second;
}

namespace {

Poly cyclotomic_memo(long d, const Gf2Field& field, std::map<long, Poly>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    Poly q = Poly::x_pow_n_plus_one(field, d);
    for (long dd : divisors(d)) {
        if (dd == d) continue;
        q = q.exact_div(cyclotomic_memo(dd, field, memo));
    }
    memo.emplace(d, q);
    return q;
}

}  // namespace

Poly cyclotomic(long d, const Gf2Field& field) {
    if (d < 1) throw std::invalid_argument("cyclotomic: index must be >= 1");
    if (d > 1 && d % 2 == 0)
        throw std::invalid_argument("cyclotomic: even index over GF(2) is the square of the odd part");
    std::map<long, Poly> memo;
    memo.emplace(1, Poly(field, {1, 1}));  // Q_1 = x + 1
    return cyclotomic_memo(d, field, memo);
}

std::vector<std::pair<long, Poly>> factor_xn_plus_one(long n, const Gf2Field& field) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("factor_xn_plus_one: n must be odd and positive");
    std::map<long, Poly> memo;
    memo.emplace(1, Poly(field, {1, 1}));
    std::vector<std::pair<long, Poly>> out;
    for (long d : divisors(n))
        out.emplace_back(d, cyclotomic_memo(d, field, memo));
    return out;
}

}  // namespace bentqf
