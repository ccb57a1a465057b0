#include "bentqf/gf2.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "bentqf/intmath.hpp"

namespace bentqf {

namespace {

// Smallest-bitmask irreducible polynomial of each degree over GF(2),
// degrees 1..63. Index by degree; entry 0 unused.
constexpr std::array<std::uint64_t, 64> kMinIrreducible = {
    0,
    0x2,              	// x
    0x7,              	// x^2+x+1
    0xb,              	// x^3+x+1
    0x13,             	// x^4+x+1
    0x25,             	// x^5+x^2+1
    0x43,             	// x^6+x+1
    0x83,             	// x^7+x+1
    0x11b,            	// x^8+x^4+x^3+x+1
    0x203,            	// x^9+x+1
    0x409,            	// x^10+x^3+1
    0x805,            	// x^11+x^2+1
    0x1009,           	// x^12+x^3+1
    0x201b,           	// x^13+x^4+x^3+x+1
    0x4021,           	// x^14+x^5+1
    0x8003,           	// x^15+x+1
    0x1002b,          	// x^16+x^5+x^3+x+1
    0x20009,          	// x^17+x^3+1
    0x40009,          	// x^18+x^3+1
    0x80027,          	// x^19+x^5+x^2+x+1
    0x100009,         	// x^20+x^3+1
    0x200005,         	// x^21+x^2+1
    0x400003,         	// x^22+x+1
    0x800021,         	// x^23+x^5+1
    0x100001b,        	// x^24+x^4+x^3+x+1
    0x2000009,        	// x^25+x^3+1
    0x400001b,        	// x^26+x^4+x^3+x+1
    0x8000027,        	// x^27+x^5+x^2+x+1
    0x10000003,       	// x^28+x+1
    0x20000005,       	// x^29+x^2+1
    0x40000003,       	// x^30+x+1
    0x80000009,       	// x^31+x^3+1
    0x10000008d,      	// x^32+x^7+x^3+x^2+1
    0x20000004b,      	// x^33+x^6+x^3+x+1
    0x40000001b,      	// x^34+x^4+x^3+x+1
    0x800000005,      	// x^35+x^2+1
    0x1000000035,     	// x^36+x^5+x^4+x^2+1
    0x200000003f,     	// x^37+x^5+x^4+x^3+x^2+x+1
    0x4000000063,     	// x^38+x^6+x^5+x+1
    0x8000000011,     	// x^39+x^4+1
    0x10000000039,    	// x^40+x^5+x^4+x^3+1
    0x20000000009,    	// x^41+x^3+1
    0x40000000027,    	// x^42+x^5+x^2+x+1
    0x80000000059,    	// x^43+x^6+x^4+x^3+1
    0x100000000021,   	// x^44+x^5+1
    0x20000000001b,   	// x^45+x^4+x^3+x+1
    0x400000000003,   	// x^46+x+1
    0x800000000021,   	// x^47+x^5+1
    0x100000000002d,  	// x^48+x^5+x^3+x^2+1
    0x2000000000071,  	// x^49+x^6+x^5+x^4+1
    0x400000000001d,  	// x^50+x^4+x^3+x^2+1
    0x800000000004b,  	// x^51+x^6+x^3+x+1
    0x10000000000009, 	// x^52+x^3+1
    0x20000000000047, 	// x^53+x^6+x^2+x+1
    0x4000000000007d, 	// x^54+x^6+x^5+x^4+x^3+x^2+1
    0x80000000000047, 	// x^55+x^6+x^2+x+1
    0x100000000000095,	// x^56+x^7+x^4+x^2+1
    0x200000000000011,	// x^57+x^4+1
    0x400000000000063,	// x^58+x^6+x^5+x+1
    0x80000000000007b,	// x^59+x^6+x^5+x^4+x^3+x+1
    0x1000000000000003,	// x^60+x+1
    0x2000000000000027,	// x^61+x^5+x^2+x+1
    0x4000000000000069,	// x^62+x^6+x^5+x^3+1
    0x8000000000000003,	// x^63+x+1
};

int mask_degree(std::uint64_t mask) {
    return 63 - std::countl_zero(mask);
}

// a*b mod p over GF(2), for arbitrary p with degree <= 63.
std::uint64_t pmulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const int k = mask_degree(p);
    const std::uint64_t top = std::uint64_t{1} << k;
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= p;
    }
    return r;
}

std::uint64_t pmod(std::uint64_t a, std::uint64_t p) {
    const int kp = mask_degree(p);
    while (a >> kp) {
        const int shift = mask_degree(a) - kp;
        a ^= p << shift;
    }
    return a;
}

std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = pmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// x^(2^j) mod p by repeated squaring.
std::uint64_t x_pow2_mod(int j, std::uint64_t p) {
    std::uint64_t r = pmod(2, p);
    for (int i = 0; i < j; ++i) r = pmulmod(r, r, p);
    return r;
}

}  // namespace

bool Gf2Field::is_irreducible(std::uint64_t poly_mask) {
    if (poly_mask < 2) return false;
    const int k = mask_degree(poly_mask);
    if (k == 1) return true;  // x and x+1
    // Rabin: x^(2^k) = x mod p, and gcd(x^(2^(k/t)) + x, p) = 1 for prime t | k.
    if (pmod(x_pow2_mod(k, poly_mask) ^ 2, poly_mask) != 0) return false;
    for (auto [t, exp] : factorize(k)) {
        (void)exp;
        std::uint64_t h = pmod(x_pow2_mod(k / static_cast<int>(t), poly_mask) ^ 2, poly_mask);
        if (pgcd(poly_mask, h) != 1) return false;
    }
    return true;
}

std::uint64_t Gf2Field::min_irreducible(int degree) {
    if (degree < 1 || degree > kMaxTableDegree)
        throw std::out_of_range("min_irreducible: degree " + std::to_string(degree) +
                                " outside table range [1, " + std::to_string(kMaxTableDegree) + "]");
    return kMinIrreducible[static_cast<std::size_t>(degree)];
}

Gf2Field::Gf2Field(int degree, std::uint64_t modulus) : k_(degree), mod_(modulus) {
    if (degree < 1 || degree > 63)
        throw std::invalid_argument("Gf2Field: degree must be in [1, 63]");
    if (mask_degree(modulus) != degree)
        throw std::invalid_argument("Gf2Field: modulus degree mismatch");
    if (!is_irreducible(modulus))
        throw std::invalid_argument("Gf2Field: defining polynomial is reducible");
    for (int j = 0; j < k_; ++j) {
        std::uint64_t t = std::uint64_t{1} << j;
        std::uint64_t acc = 0;
        for (int i = 0; i < k_; ++i) {
            acc ^= t;
            t = mul(t, t);
        }
        if (acc & 1) trace_mask_ |= std::uint64_t{1} << j;
    }
}

Gf2Field Gf2Field::with_default_modulus(int degree) {
    return Gf2Field(degree, min_irreducible(degree));
}

std::uint64_t Gf2Field::pow(std::uint64_t a, std::uint64_t exp) const {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = mul(r, a);
        a = mul(a, a);
        exp >>= 1;
    }
    return r;
}

std::uint64_t Gf2Field::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("Gf2Field::inv: zero has no inverse");
    if (k_ == 1) return 1;
    return pow(a, (std::uint64_t{1} << k_) - 2);
}

FieldContext::FieldContext(int e, int m) : e_(e), m_(m), n_(e * m) {
    if (e < 1 || e > kSubfieldCap)
        throw std::invalid_argument("FieldContext: e must be in [1, 16]");
    if (m < 2) throw std::invalid_argument("FieldContext: m must be >= 2");
    if (m % 2 != 0) throw std::invalid_argument("FieldContext: m must be even");
    small_ = Gf2Field::with_default_modulus(e);
    big_ = Gf2Field::with_default_modulus(n_);

    for (long d : divisors(n_)) {
        if (d == n_ || d > kSubfieldCap) continue;
        submaps_.push_back(build_subfield_map(big_, static_cast<int>(d)));
    }

    const SubfieldMap* sm = find_map(e_);
    embed_root_ = sm->root;
    embed_pow_ = sm->root_pow;
}

const FieldContext::SubfieldMap* FieldContext::find_map(int d) const {
    for (const auto& sm : submaps_)
        if (sm.d == d) return &sm;
    return nullptr;
}

FieldContext::SubfieldMap FieldContext::build_subfield_map(const Gf2Field& big, int d) {
    const int n = big.degree();
    // Basis of the fixed space of Frobenius^d: null space of x -> x^(2^d) + x.
    // Columns of the map over the basis alpha^i, as n-bit masks.
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        cols[static_cast<std::size_t>(i)] = big.frobenius(std::uint64_t{1} << i, d) ^ (std::uint64_t{1} << i);

    // Null space via column elimination: track combinations in an identity tail.
    std::vector<std::uint64_t> comb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comb[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
    std::vector<std::uint64_t> basis;
    std::vector<int> pivot_of_row(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        std::uint64_t c = cols[static_cast<std::size_t>(i)];
        std::uint64_t cb = comb[static_cast<std::size_t>(i)];
        while (c) {
            int row = 63 - std::countl_zero(c);
            int piv = pivot_of_row[static_cast<std::size_t>(row)];
            if (piv < 0) break;
            c ^= cols[static_cast<std::size_t>(piv)];
            cb ^= comb[static_cast<std::size_t>(piv)];
        }
        if (c == 0) {
            basis.push_back(cb);  // kernel vector
        } else {
            int row = 63 - std::countl_zero(c);
            pivot_of_row[static_cast<std::size_t>(row)] = i;
            cols[static_cast<std::size_t>(i)] = c;
            comb[static_cast<std::size_t>(i)] = cb;
        }
    }
    if (static_cast<int>(basis.size()) != d)
        throw std::logic_error("subfield fixed-space dimension mismatch");

    // All roots of the degree-d table polynomial among the 2^d subfield elements.
    const std::uint64_t def_poly = Gf2Field::min_irreducible(d);
    std::uint64_t best_root = 0;
    bool found = false;
    const std::uint64_t count = std::uint64_t{1} << d;
    std::uint64_t elem = 0;
    for (std::uint64_t idx = 0;; ++idx) {
        // Horner over the bits of def_poly, highest degree first.
        std::uint64_t val = 0;
        for (int bit = d; bit >= 0; --bit) {
            val = big.mul(val, elem);
            if ((def_poly >> bit) & 1) val ^= 1;
        }
        if (val == 0 && (!found || elem < best_root)) {
            best_root = elem;
            found = true;
        }
        if (idx + 1 == count) break;
        // Gray-code step through the span of the kernel basis.
        const int flip = std::countr_zero(idx + 1);
        elem ^= basis[static_cast<std::size_t>(flip)];
    }
    if (!found) throw std::logic_error("no root of defining polynomial in subfield copy");

    SubfieldMap sm;
    sm.d = d;
    sm.root = best_root;
    sm.root_pow.resize(static_cast<std::size_t>(d));
    std::uint64_t p = 1;
    for (int j = 0; j < d; ++j) { sm.root_pow[static_cast<std::size_t>(j)] = p; p = big.mul(p, best_root); }

    // Coordinate functionals: solve sum_j a_j root^j = T for a. Gaussian
    // elimination on the n x d system, trackers give each a_j as a parity
    // of T's bits.
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);   // d-bit rows
    std::vector<std::uint64_t> track(static_cast<std::size_t>(n), 0);  // n-bit trackers
    for (int i = 0; i < n; ++i) {
        std::uint64_t r = 0;
        for (int j = 0; j < d; ++j)
            if ((sm.root_pow[static_cast<std::size_t>(j)] >> i) & 1) r |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(i)] = r;
        track[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
    }
    sm.coord.assign(static_cast<std::size_t>(d), 0);
    std::vector<int> where(static_cast<std::size_t>(d), -1);
    int rank = 0;
    for (int col = 0; col < d && rank < n; ++col) {
        int sel = -1;
        for (int i = rank; i < n; ++i)
            if ((rows[static_cast<std::size_t>(i)] >> col) & 1) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(rank)]);
        std::swap(track[static_cast<std::size_t>(sel)], track[static_cast<std::size_t>(rank)]);
        for (int i = 0; i < n; ++i) {
            if (i != rank && ((rows[static_cast<std::size_t>(i)] >> col) & 1)) {
                rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(rank)];
                track[static_cast<std::size_t>(i)] ^= track[static_cast<std::size_t>(rank)];
            }
        }
        where[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }
    for (int j = 0; j < d; ++j) {
        if (where[static_cast<std::size_t>(j)] < 0)
            throw std::logic_error("embedding matrix is rank-deficient");
        sm.coord[static_cast<std::size_t>(j)] = track[static_cast<std::size_t>(where[static_cast<std::size_t>(j)])];
    }
    return sm;
}

std::uint64_t FieldContext::trace_to_copy(std::uint64_t x, int d) const {
    if (d < 1 || n_ % d != 0)
        throw std::invalid_argument("trace: target degree does not divide n");
    std::uint64_t acc = x;
    std::uint64_t s = x;
    for (int step = 1; step < n_ / d; ++step) {
        s = big_.frobenius(s, d);
        acc ^= s;
    }
    return acc;
}

std::uint64_t FieldContext::trace(std::uint64_t x, int d) const {
    const std::uint64_t t = trace_to_copy(x, d);
    if (d == n_) return t;
    if (d == 1) return t;  // the prime-subfield copy is {0, 1} in any basis
    const SubfieldMap* sm = find_map(d);
    if (sm == nullptr)
        throw std::domain_error("trace: no precomputed basis map for subfield degree " + std::to_string(d));
    std::uint64_t a = 0;
    for (int j = 0; j < d; ++j)
        if (__builtin_parityll(t & sm->coord[static_cast<std::size_t>(j)]))
            a |= std::uint64_t{1} << j;
    return a;
}

ContextPtr make_context(int e, int m) {
    return std::make_shared<const FieldContext>(e, m);
}

}  // namespace bentqf
