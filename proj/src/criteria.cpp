#include "bentqf/criteria.hpp"

#include <numeric>
#include <stdexcept>

#include "bentqf/intmath.hpp"

namespace bentqf {

std::string to_string(ParamKind kind) {
    switch (kind) {
        case ParamKind::PR: return "PR";
        case ParamKind::PQ: return "PQ";
        case ParamKind::Unsupported: return "UNSUPPORTED";
    }
    return "UNSUPPORTED";
}

namespace {

// ord_p(2) = p-1, or (p-1)/2 with (p-1)/2 odd.
bool pr_order_ok(long p, long ord) {
    if (ord == p - 1) return true;
    const long half = (p - 1) / 2;
    return ord == half && half % 2 == 1;
}

}  // namespace

ParamClass classify(int e, long m) {
    if (e < 1) {
        throw std::invalid_argument("classify: e must be >= 1");
    }
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("classify: m must be even and >= 2");
    }
    ParamClass cls;
    cls.e = e;
    cls.m = m;
    long odd = m;
    while (odd % 2 == 0) {
        odd /= 2;
        ++cls.v;
    }
    if (odd == 1) {
        cls.failed_condition = "odd part of m is trivial";
        return cls;
    }
    const auto factors = factorize(odd);
    if (factors.size() == 1) {
        cls.p = factors[0].first;
        cls.r = factors[0].second;
        cls.ord_p = mult_order(2, cls.p);
        if (std::gcd(static_cast<long>(e), cls.p - 1) != 1) {
            cls.failed_condition = "gcd(e, p-1) != 1";
            return cls;
        }
        if (!pr_order_ok(cls.p, cls.ord_p)) {
            cls.failed_condition = "ord_p(2) is not p-1 or (p-1)/2 with odd (p-1)/2";
            return cls;
        }
        // The structural test needs each Q_{p^k} to divide c_f entirely or
        // not at all, which holds exactly when gcd(e, ord_{p^k}(2)) = 1 for
        // every level. ord_{p^k}(2) = p^{k-1} ord_p(2) for these p, so the
        // order condition above settles k = 1 but levels k >= 2 additionally
        // need p not to divide e: otherwise Q_{p^k} splits over GF(2^e) into
        // several self-reciprocal factors and a proper factor of it can
        // divide c_f without the coefficient sums noticing. Verified
        // concretely at (e, m) = (3, 18), where forms rejected by the gcd
        // have certificates that are quadratic factors of Q_9 over GF(8).
        if (cls.r > 1 && e % cls.p == 0) {
            cls.failed_condition = "gcd(e, p) != 1 with r > 1";
            return cls;
        }
        cls.kind = ParamKind::PR;
        return cls;
    }
    if (factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1) {
        cls.p = factors[0].first;
        cls.q = factors[1].first;
        cls.ord_p = mult_order(2, cls.p);
        cls.ord_q = mult_order(2, cls.q);
        if (std::gcd(cls.p - 1, cls.q - 1) != 2) {
            cls.failed_condition = "gcd(p-1, q-1) != 2";
            return cls;
        }
        if (cls.ord_p != cls.p - 1) {
            cls.failed_condition = "ord_p(2) != p-1";
            return cls;
        }
        if (cls.ord_q != cls.q - 1) {
            cls.failed_condition = "ord_q(2) != q-1";
            return cls;
        }
        if ((cls.p - 1) * (cls.q - 1) % 8 != 0) {
            cls.failed_condition = "(p-1)(q-1)/4 is odd";
            return cls;
        }
        if (std::gcd(static_cast<long>(e), (cls.p - 1) * (cls.q - 1)) != 1) {
            cls.failed_condition = "gcd(e, (p-1)(q-1)) != 1";
            return cls;
        }
        cls.kind = ParamKind::PQ;
        return cls;
    }
    cls.failed_condition = "odd part of m is not p^r or p*q";
    return cls;
}

CoeffSums fold_sums(const std::vector<std::uint64_t>& coeffs, long m, long t) {
    if (t < 1 || m < 2 || m % (2 * t) != 0) {
        throw std::invalid_argument("fold_sums: period must satisfy 2t | m");
    }
    if (coeffs.size() != static_cast<std::size_t>(m / 2)) {
        throw std::invalid_argument("fold_sums: expected m/2 coefficients");
    }
    CoeffSums sums;
    sums.period = t;
    sums.w.assign(static_cast<std::size_t>(t), 0);
    sums.u.assign(static_cast<std::size_t>(t), 0);
    const long terms = m / (2 * t);
    for (long i = 1; i < t; ++i) {
        std::uint64_t acc = 0;
        for (long j = 0; j < terms; ++j) {
            acc ^= coeffs[static_cast<std::size_t>(i + j * t - 1)];  // c_{i+jt}
        }
        sums.w[static_cast<std::size_t>(i)] = acc;
    }
    sums.u[0] = coeffs.back();  // u_0 = c_{m/2}
    for (long i = 1; i < t; ++i) {
        sums.u[static_cast<std::size_t>(i)] =
            sums.w[static_cast<std::size_t>(i)] ^ sums.w[static_cast<std::size_t>(t - i)];
    }
    return sums;
}

namespace {

void ensure_match(const QuadForm& f, const ParamClass& cls, ParamKind want) {
    if (cls.kind != want) {
        throw std::invalid_argument("criteria: parameter class kind mismatch");
    }
    if (cls.e != f.ctx().e() || cls.m != f.ctx().m()) {
        throw std::invalid_argument("criteria: parameter class does not match the form");
    }
}

long mod_floor(long a, long t) {
    const long red = a % t;
    return red < 0 ? red + t : red;
}

}  // namespace

CoeffSums compute_uk(const QuadForm& f, const ParamClass& cls, int k) {
    ensure_match(f, cls, ParamKind::PR);
    if (k < 1 || k > cls.r) {
        throw std::out_of_range("compute_uk: level k must be in [1, r]");
    }
    return fold_sums(f.coeffs(), cls.m, ipow(cls.p, k));
}

bool check_pr(const QuadForm& f, const ParamClass& cls) {
    ensure_match(f, cls, ParamKind::PR);
    if (f.c(static_cast<int>(cls.m) / 2) == 0) {
        return false;
    }
    for (int k = 1; k <= cls.r; ++k) {
        const long period = ipow(cls.p, k);
        const long stride = period / cls.p;  // p^(k-1)
        const CoeffSums sums = fold_sums(f.coeffs(), cls.m, period);
        bool level_ok = false;
        for (long i = 0; i <= (stride - 1) / 2 && !level_ok; ++i) {
            const std::uint64_t head = sums.u[static_cast<std::size_t>(i)];
            for (long j = 1; j < cls.p; ++j) {
                if (sums.u[static_cast<std::size_t>(mod_floor(i + j * stride, period))] != head) {
                    level_ok = true;
                    break;
                }
            }
        }
        if (!level_ok) {
            return false;
        }
    }
    return true;
}

bool check_2vp(const QuadForm& f, const ParamClass& cls) {
    ensure_match(f, cls, ParamKind::PR);
    if (cls.r != 1) {
        throw std::invalid_argument("check_2vp: class must have r = 1");
    }
    const std::uint64_t half_coeff = f.c(static_cast<int>(cls.m) / 2);
    if (half_coeff == 0) {
        return false;
    }
    const CoeffSums sums = fold_sums(f.coeffs(), cls.m, cls.p);
    for (long i = 1; i <= (cls.p - 1) / 2; ++i) {
        // u_i = w_i + w_{p-i}
        if (sums.u[static_cast<std::size_t>(i)] != half_coeff) {
            return true;
        }
    }
    return false;
}

bool check_pq(const QuadForm& f, const ParamClass& cls) {
    ensure_match(f, cls, ParamKind::PQ);
    const std::uint64_t half_coeff = f.c(static_cast<int>(cls.m) / 2);
    if (half_coeff == 0) {
        return false;  // (i)
    }
    for (const long t : {cls.p, cls.q}) {
        const CoeffSums sums = fold_sums(f.coeffs(), cls.m, t);
        bool ok = false;
        for (long i = 1; i <= (t - 1) / 2; ++i) {
            if (sums.u[static_cast<std::size_t>(i)] != half_coeff) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            return false;  // (ii) for p, (iii) for q
        }
    }
    const long t = cls.p * cls.q;
    const CoeffSums sums = fold_sums(f.coeffs(), cls.m, t);
    for (long i = 0; i < t; ++i) {
        const std::uint64_t val = sums.u[static_cast<std::size_t>(i)] ^
                                  sums.u[static_cast<std::size_t>(mod_floor(i - cls.p, t))] ^
                                  sums.u[static_cast<std::size_t>(mod_floor(i - cls.q, t))] ^
                                  sums.u[static_cast<std::size_t>(mod_floor(i - cls.p - cls.q, t))];
        if (val != 0) {
            return true;  // (iv)
        }
    }
    return false;
}

}  // namespace bentqf
