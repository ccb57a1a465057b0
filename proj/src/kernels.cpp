#include "bentqf/kernels.hpp"

#include <algorithm>
#include <bit>

namespace bentqf {

int rank_gf2(std::span<std::uint64_t> rows) {
    const int nrows = static_cast<int>(rows.size());
    int rank = 0;
    for (int col = 0; col < 64 && rank < nrows; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (rows[static_cast<std::size_t>(r)] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        for (int r = rank + 1; r < nrows; ++r) {
            if (rows[static_cast<std::size_t>(r)] & bit) {
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
            }
        }
        ++rank;
    }
    return rank;
}

namespace detail {

std::vector<std::int32_t> truth_table_from_rows(int n,
                                                const std::vector<std::uint64_t>& rows,
                                                const std::vector<int>& diag,
                                                const std::vector<int>& seeds) {
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t nblocks = seeds.size();
    const std::uint64_t bsize = size / nblocks;
    std::vector<std::int32_t> out(size);
#pragma omp parallel for schedule(static)
    for (std::uint64_t blk = 0; blk < nblocks; ++blk) {
        const std::uint64_t base = blk * bsize;
        std::uint64_t x = base;
        int fv = seeds[blk];
        out[x] = 1 - 2 * fv;
        // Gray-code walk: step idx flips bit ctz(idx), and the flip costs
        // one table lookup and one parity instead of a field evaluation.
        for (std::uint64_t idx = 1; idx < bsize; ++idx) {
            const int b = std::countr_zero(idx);
            fv ^= diag[static_cast<std::size_t>(b)] ^
                  (std::popcount(rows[static_cast<std::size_t>(b)] & x) & 1);
            x ^= std::uint64_t{1} << b;
            out[x] = 1 - 2 * fv;
        }
    }
    return out;
}

SpectrumSummary summarize_spectrum(int n, std::vector<std::int32_t>&& table) {
    fwht_inplace(table);
    SpectrumSummary summary;
    summary.n = n;
    std::int64_t maxabs = 0;
    for (const std::int32_t v : table) {
        ++summary.values[v];
        const std::int64_t mag = v < 0 ? -static_cast<std::int64_t>(v) : v;
        maxabs = std::max(maxabs, mag);
    }
    // The top magnitude of a quadratic's spectrum is 2^((n+k_f)/2).
    const int top = std::bit_width(static_cast<std::uint64_t>(maxabs)) - 1;
    summary.k_f = 2 * top - n;
    return summary;
}

}  // namespace detail

void fwht_inplace(std::span<std::int32_t> v) {
    const std::size_t size = v.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("fwht_inplace: length must be a power of two");
    }
    for (std::size_t h = 1; h < size; h <<= 1) {
        const std::size_t stride = 2 * h;
#pragma omp parallel for schedule(static) if (size >= (std::size_t{1} << 18))
        for (std::size_t base = 0; base < size; base += stride) {
            for (std::size_t j = base; j < base + h; ++j) {
                const std::int32_t a = v[j];
                const std::int32_t b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

RankSweepTable::RankSweepTable(const ContextPtr& ctx)
    : n_(ctx->n()), bits_(ctx->e() * (ctx->m() / 2)) {
    if (bits_ > 64) {
        throw std::invalid_argument("RankSweepTable: coefficient space exceeds 64 packed bits");
    }
    mats_.assign(static_cast<std::size_t>(bits_) * static_cast<std::size_t>(n_), 0);
    QuadForm probe(ctx, std::vector<std::uint64_t>(static_cast<std::size_t>(ctx->m() / 2), 0));
    for (int t = 0; t < bits_; ++t) {
        probe.set_packed(std::uint64_t{1} << t);
        const auto rows = bilinear_rows(probe);
        std::copy(rows.begin(), rows.end(),
                  mats_.begin() + static_cast<std::ptrdiff_t>(t) * n_);
    }
}

int RankSweepTable::kernel_dimension(std::uint64_t packed) const {
    if (bits_ < 64 && (packed >> bits_) != 0) {
        throw std::domain_error("RankSweepTable: packed value out of range");
    }
    std::array<std::uint64_t, 64> acc{};
    std::uint64_t left = packed;
    while (left != 0) {
        const int t = std::countr_zero(left);
        left &= left - 1;
        const std::uint64_t* mat = mats_.data() + static_cast<std::ptrdiff_t>(t) * n_;
        for (int r = 0; r < n_; ++r) {
            acc[static_cast<std::size_t>(r)] ^= mat[r];
        }
    }
    return n_ - rank_gf2(std::span<std::uint64_t>(acc.data(), static_cast<std::size_t>(n_)));
}

}  // namespace bentqf
