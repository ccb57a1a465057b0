#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bentqf/quadform.hpp"

namespace bentqf {

/// Rows of the symplectic matrix B of the bilinear form
/// Q_f(x, y) = f(x+y) + f(x) + f(y) in the standard basis:
/// row i holds the bits Q_f(b_i, b_j) packed over j. B is symmetric with
/// zero diagonal, so only the i < j evaluations are made.
template <class Form>
std::vector<std::uint64_t> bilinear_rows(const Form& f) {
    const int n = f.dimension();
    std::vector<int> diag(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        diag[static_cast<std::size_t>(i)] = f.evaluate(std::uint64_t{1} << i);
    }
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t xy = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            const int bit = f.evaluate(xy) ^ diag[static_cast<std::size_t>(i)] ^
                            diag[static_cast<std::size_t>(j)];
            if (bit) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    return rows;
}

/// Rank over GF(2) of a row-packed matrix. Destroys its argument.
int rank_gf2(std::span<std::uint64_t> rows);

/// dim K_f = n - rank(B), the dimension of the radical of Q_f.
template <class Form>
int kernel_dimension(const Form& f) {
    auto rows = bilinear_rows(f);
    return f.dimension() - rank_gf2(rows);
}

/// Bent iff the bilinear form is non-degenerate (K_f = {0}).
template <class Form>
bool is_bent_rank(const Form& f) {
    return kernel_dimension(f) == 0;
}

/// Truth table as (-1)^f(x), one entry per x in [0, 2^n). Serial reference:
/// every entry comes from a full field-arithmetic evaluation.
template <class Form>
std::vector<std::int32_t> truth_table_reference(const Form& f) {
    const int n = f.dimension();
    if (n > kSpectralCapN) {
        throw std::domain_error("truth_table: dimension exceeds the 2^30 table cap");
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::int32_t> out(size);
    for (std::uint64_t x = 0; x < size; ++x) {
        out[x] = 1 - 2 * f.evaluate(x);
    }
    return out;
}

namespace detail {

std::vector<std::int32_t> truth_table_from_rows(int n,
                                                const std::vector<std::uint64_t>& rows,
                                                const std::vector<int>& diag,
                                                const std::vector<int>& seeds);

}  // namespace detail

/// Fast truth table fill. Uses f(x + e_b) = f(x) + f(e_b) + Q_f(x, e_b) to
/// extend along a Gray-code walk, so the hot loop is one XOR and one parity
/// per entry; blocks of 2^16 entries run in parallel, each seeded by a
/// single direct evaluation.
template <class Form>
std::vector<std::int32_t> truth_table_signed(const Form& f) {
    const int n = f.dimension();
    if (n > kSpectralCapN) {
        throw std::domain_error("truth_table: dimension exceeds the 2^30 table cap");
    }
    auto rows = bilinear_rows(f);
    std::vector<int> diag(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
        diag[static_cast<std::size_t>(b)] = f.evaluate(std::uint64_t{1} << b);
    }
    const int block_bits = n < 16 ? n : 16;
    const std::uint64_t nblocks = std::uint64_t{1} << (n - block_bits);
    std::vector<int> seeds(nblocks);
    for (std::uint64_t blk = 0; blk < nblocks; ++blk) {
        seeds[blk] = f.evaluate(blk << block_bits);
    }
    return detail::truth_table_from_rows(n, rows, diag, seeds);
}

/// In-place Walsh-Hadamard transform of a length-2^n vector.
void fwht_inplace(std::span<std::int32_t> v);

namespace detail {

SpectrumSummary summarize_spectrum(int n, std::vector<std::int32_t>&& table);

}  // namespace detail

/// Full Hadamard spectrum via truth table + fast transform. n <= 30.
template <class Form>
SpectrumSummary walsh_spectrum(const Form& f) {
    return detail::summarize_spectrum(f.dimension(), truth_table_signed(f));
}

/// Bent iff every spectrum value is ±2^(n/2).
template <class Form>
bool is_bent_spectral(const Form& f) {
    const int n = f.dimension();
    if (n % 2 != 0) {
        return false;
    }
    const auto summary = walsh_spectrum(f);
    const std::int64_t flat = std::int64_t{1} << (n / 2);
    for (const auto& [value, count] : summary.values) {
        if (value != flat && value != -flat) {
            return false;
        }
    }
    return true;
}

/// Checks the predicted three-valued spectrum against the transform:
/// with k = dim K_f, value 0 occurs 2^n - 2^(n-k) times and ±2^((n+k)/2)
/// occur 2^(n-k-1) ± 2^((n-k)/2-1) times. Requires 2 | (n - k).
template <class Form>
bool check_vd_distribution(const Form& f) {
    const int n = f.dimension();
    const int k = kernel_dimension(f);
    const int nk = n - k;
    if (nk % 2 != 0) {
        return false;
    }
    std::map<std::int64_t, std::uint64_t> expected;
    const std::uint64_t zeros = (std::uint64_t{1} << n) - (std::uint64_t{1} << nk);
    if (zeros > 0) {
        expected[0] = zeros;
    }
    const std::int64_t peak = std::int64_t{1} << ((n + k) / 2);
    if (nk == 0) {
        expected[peak] = 1;
    } else {
        const std::uint64_t half = std::uint64_t{1} << (nk - 1);
        const std::uint64_t spread = std::uint64_t{1} << (nk / 2 - 1);
        expected[peak] = half + spread;
        expected[-peak] = half - spread;
    }
    const auto summary = walsh_spectrum(f);
    return summary.values == expected && summary.k_f == k;
}

/// Precomputed radical-rank sweeps over the packed coefficient space of a
/// fixed (e, m). B is GF(2)-linear in the coefficient bits, so each of the
/// e*m/2 bits contributes a fixed matrix; a form's B is the XOR of the
/// matrices of its set bits. Turns the per-form cost into a few dozen
/// 64-bit XORs plus one elimination, with no field arithmetic.
class RankSweepTable {
public:
    explicit RankSweepTable(const ContextPtr& ctx);

    int coeff_bits() const { return bits_; }
    int kernel_dimension(std::uint64_t packed) const;
    bool is_bent(std::uint64_t packed) const { return kernel_dimension(packed) == 0; }

private:
    int n_;
    int bits_;
    std::vector<std::uint64_t> mats_;  // bits_ matrices of n_ rows each, concatenated
};

}  // namespace bentqf
