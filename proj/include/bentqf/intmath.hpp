#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bentqf {

// Deterministic trial division; moduli in this project are desk-scale.
inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (prime, exponent) pairs, ascending.
inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) { n /= d; ++k; }
            out.emplace_back(d, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline long euler_phi(long n) {
    long phi = n;
    for (auto [p, k] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline long ipow(long base, int exp) {
    long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Least t >= 1 with base^t = 1 (mod modulus). Inputs must be coprime.
inline long mult_order(long base, long modulus) {
    if (modulus < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    base %= modulus;
    if (base < 0) base += modulus;
    if (std::gcd(base, modulus) != 1)
        throw std::invalid_argument("mult_order: base and modulus are not coprime");
    long t = 1;
    long acc = base % modulus;
    while (acc != 1) {
        acc = (acc * base) % modulus;
        ++t;
    }
    return t;
}

}  // namespace bentqf
