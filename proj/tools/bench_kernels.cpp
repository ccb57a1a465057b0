// Times the parallel kernels against their serial reference paths and
// checks that both routes produce identical results.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "bentqf/enumeration.hpp"
#include "bentqf/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class Fn>
double best_ms(Fn&& fn, int reps) {
    double best = 0.0;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (i == 0 || ms < best) {
            best = ms;
        }
    }
    return best;
}

void report(const char* label, double serial_ms, double kernel_ms, bool agree) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx   %s\n", label, serial_ms, kernel_ms,
                serial_ms / kernel_ms, agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        // Truth-table fill at n = 18: direct evaluation vs Gray-code walk.
        const bentqf::ContextPtr ctx = bentqf::make_context(3, 6);
        const bentqf::QuadForm f(ctx, {1, 2, 3});
        std::vector<std::int32_t> ref;
        std::vector<std::int32_t> fast;
        const double serial_ms = best_ms([&] { ref = bentqf::truth_table_reference(f); }, 3);
        const double kernel_ms = best_ms([&] { fast = bentqf::truth_table_signed(f); }, 3);
        report("truth table fill (e=3, m=6)", serial_ms, kernel_ms, ref == fast);
    }

    {
        // Per-form radical rank at n = 30: evaluation-built B vs the
        // precomputed per-coefficient-bit XOR table, swept serially.
        const bentqf::ContextPtr ctx = bentqf::make_context(1, 30);
        const bentqf::RankSweepTable table(ctx);
        const std::uint64_t space = std::uint64_t{1} << 15;
        std::uint64_t direct_count = 0;
        std::uint64_t table_count = 0;
        const double serial_ms = best_ms(
            [&] {
                direct_count = 0;
                bentqf::QuadForm f(ctx, std::vector<std::uint64_t>(15, 0));
                for (std::uint64_t packed = 0; packed < space; ++packed) {
                    f.set_packed(packed);
                    direct_count += bentqf::is_bent_rank(f) ? 1 : 0;
                }
            },
            1);
        const double kernel_ms = best_ms(
            [&] {
                table_count = 0;
                for (std::uint64_t packed = 0; packed < space; ++packed) {
                    table_count += table.is_bent(packed) ? 1 : 0;
                }
            },
            3);
        report("rank sweep 2^15 forms (e=1, m=30)", serial_ms, kernel_ms,
               direct_count == table_count);
    }

    {
        // Full exhaustive count at (e=1, m=30): serial per-form gcd
        // reference vs the parallel rank-table sweep.
        std::uint64_t serial_count = 0;
        std::uint64_t parallel_count = 0;
        const double serial_ms = best_ms(
            [&] { serial_count = bentqf::count_exhaustive_serial(1, 30, bentqf::OracleKind::Gcd); },
            1);
        const double kernel_ms = best_ms(
            [&] { parallel_count = bentqf::count_exhaustive(1, 30, bentqf::OracleKind::Rank); }, 3);
        report("exhaustive count (e=1, m=30)", serial_ms, kernel_ms,
               serial_count == parallel_count);
    }

    return 0;
}
