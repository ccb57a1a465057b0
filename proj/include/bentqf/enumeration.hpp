#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bentqf/criteria.hpp"

namespace bentqf {

using BigInt = boost::multiprecision::cpp_int;

/// Which bentness decision procedure an exhaustive sweep applies.
/// Gcd and Rank work for any (e, m); Structural needs a supported class.
enum class OracleKind { Gcd, Rank, Structural };

std::string to_string(OracleKind oracle);

struct CountReport {
    ParamClass cls;
    std::optional<BigInt> formula;           // absent when not requested
    std::optional<std::uint64_t> exhaustive;  // absent when not requested
    BigInt space;                             // 2^(e*m/2)
};

/// Closed-form bent count, evaluated in exact integer arithmetic as
/// (2^e - 1) * prod(2^(E_i) - 1) * 2^(e(m-2)/2 - sum E_i) with
///   PR: E_i = e(p^i - p^(i-1))/2 for i = 1..r,
///   PQ: E in { e(p-1)/2, e(q-1)/2, e(p-1)(q-1)/2 },
/// so the dyadic denominators cancel symbolically and nothing is rounded.
BigInt count_formula(const ParamClass& cls);

inline constexpr int kSweepCapBits = 24;

/// Count of bent functions over all 2^(e*m/2) coefficient vectors, sweep
/// partitioned across OpenMP workers (merge is addition, so the total is
/// deterministic). Throws when the packed space exceeds max_bits.
std::uint64_t count_exhaustive(int e, long m, OracleKind oracle = OracleKind::Gcd,
                               int max_bits = kSweepCapBits);

/// Serial reference for the same count: one fresh QuadForm per vector and
/// only the direct oracle paths (no rank table), kept as the slow
/// independent route the parallel sweep is tested against.
std::uint64_t count_exhaustive_serial(int e, long m, OracleKind oracle = OracleKind::Gcd,
                                      int max_bits = kSweepCapBits);

struct SampleStats {
    std::uint64_t draws = 0;
    std::uint64_t accepted = 0;
};

/// Seeded rejection sampler: draws c_1..c_{m/2-1} uniformly from GF(2^e)
/// and c_{m/2} from GF(2^e) \ {0}, accepting when the gcd oracle passes.
/// The draw sequence is mt19937_64(seed) with each coefficient taken as
/// the low e bits of one engine output (c_{m/2} redrawn while zero), which
/// is identical across standard libraries.
std::vector<QuadForm> sample_bent(int e, long m, std::uint64_t seed, std::size_t count,
                                  SampleStats* stats = nullptr);

CountReport make_count_report(int e, long m, bool with_formula, bool with_exhaustive,
                              OracleKind oracle = OracleKind::Gcd,
                              int max_bits = kSweepCapBits);

}  // namespace bentqf
