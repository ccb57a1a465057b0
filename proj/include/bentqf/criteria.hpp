#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bentqf/quadform.hpp"

namespace bentqf {

enum class ParamKind { PR, PQ, Unsupported };

std::string to_string(ParamKind kind);

/// Classification of (e, m) into the two families with structural bentness
/// criteria and closed-form counts: m = 2^v p^r and m = 2^v p q, each with
/// arithmetic side conditions on multiplicative orders and gcds. Anything
/// else is Unsupported; the gcd/rank/spectral oracles still apply there,
/// only the structural shortcut and the count formula are gated.
struct ParamClass {
    ParamKind kind = ParamKind::Unsupported;
    int e = 0;
    long m = 0;
    int v = 0;   // exponent of 2 in m
    long p = 0;  // odd prime (smaller one for PQ)
    long q = 0;  // second odd prime, PQ only
    int r = 0;   // exponent of p, PR only
    long ord_p = 0;  // ord_p(2), cached for reporting
    long ord_q = 0;  // ord_q(2), PQ only
    std::string failed_condition;  // first failed side condition; empty unless Unsupported
};

/// Factors m and checks every side condition, naming the first failure.
/// Unsupported is a value, not an error.
ParamClass classify(int e, long m);

/// One fold level of the coefficient sums: period t with 2t | m,
/// w[i] = sum_j c_{i+jt} for 1 <= i <= t-1, u[0] = c_{m/2},
/// u[i] = w[i] + w[t-i], extended periodically (indices taken mod t).
struct CoeffSums {
    long period = 0;
    std::vector<std::uint64_t> w;  // w[0] unused
    std::vector<std::uint64_t> u;  // one period of the symmetric sequence
};

CoeffSums fold_sums(const std::vector<std::uint64_t>& coeffs, long m, long t);

/// Level-k sums for a PR class: period p^k. k ranges over 1..r.
CoeffSums compute_uk(const QuadForm& f, const ParamClass& cls, int k);

/// Structural bentness test for m = 2^v p^r: c_{m/2} != 0 and, for every
/// level k, some column A_{i,k}(j) = u_{i+j*p^(k-1),k} with
/// 0 <= i <= (p^(k-1)-1)/2 is non-constant.
bool check_pr(const QuadForm& f, const ParamClass& cls);

/// Specialization to r = 1: c_{m/2} != 0 and some w_i + w_{p-i} != c_{m/2}
/// with 1 <= i <= (p-1)/2. Must agree with check_pr on its domain.
bool check_2vp(const QuadForm& f, const ParamClass& cls);

/// Structural bentness test for m = 2^v p q: c_{m/2} != 0, the w^p and w^q
/// folds each have some w_i + w_{t-i} != c_{m/2}, and the pq fold has some
/// u_i + u_{i-p} + u_{i-q} + u_{i-p-q} != 0 (indices mod pq).
bool check_pq(const QuadForm& f, const ParamClass& cls);

}  // namespace bentqf
