#pragma once

// Exact matrix permanents: a definitional expansion used as the trusted oracle
// and Ryser's inclusion-exclusion formula for everything larger.

#include "arith.hpp"
#include "int_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hyperweight {

inline constexpr std::size_t kNaivePermanentLimit = 8;
inline constexpr std::size_t kRyserPermanentLimit = 30;
inline constexpr std::size_t kPermanentDispatchThreshold = 6;

namespace detail {

inline void require_square(const IntMatrix& m, const char* who)
{
    if (!m.square())
        throw std::invalid_argument(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", not square");
}

// Upper bound on every partial product appearing in Ryser's sum, times 2^n
// for the summation itself.
inline bool ryser_fits_int128(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    BigInt limit = BigInt(1) << 62;
    BigInt bound = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt row_abs = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const BigInt& x = m(r, c);
            if (abs(x) >= limit)
                return false;
            row_abs += abs(x);
        }
        if (row_abs >= limit)
            return false;
        bound *= std::max(row_abs, BigInt(1));
    }
    return (bound << n) < (BigInt(1) << 125);
}

inline BigInt ryser_int128(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::int64_t> entries(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            entries[r * n + c] = static_cast<std::int64_t>(m(r, c));

    std::vector<std::int64_t> row_sums(n, 0);
    __int128 total = 0;
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const unsigned col = static_cast<unsigned>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        const std::int64_t sign = (gray & bit) ? 1 : -1;
        for (std::size_t r = 0; r < n; ++r)
            row_sums[r] += sign * entries[r * n + col];

        __int128 product = 1;
        for (std::size_t r = 0; r < n && product != 0; ++r)
            product *= row_sums[r];
        if (std::popcount(gray) % 2 == 0)
            total += product;
        else
            total -= product;
    }
    if (n % 2 == 1)
        total = -total;

    // cpp_int has no direct __int128 constructor on every platform; split.
    const bool negative = total < 0;
    unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
    BigInt result = BigInt(static_cast<std::uint64_t>(mag >> 64));
    result <<= 64;
    result += BigInt(static_cast<std::uint64_t>(mag));
    return negative ? BigInt(-result) : result;
}

inline BigInt ryser_bigint(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<BigInt> row_sums(n, BigInt(0));
    BigInt total = 0;
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const unsigned col = static_cast<unsigned>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        const bool added = (gray & bit) != 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (added)
                row_sums[r] += m(r, col);
            else
                row_sums[r] -= m(r, col);
        }
        BigInt product = 1;
        for (std::size_t r = 0; r < n && product != 0; ++r)
            product *= row_sums[r];
        if (std::popcount(gray) % 2 == 0)
            total += product;
        else
            total -= product;
    }
    if (n % 2 == 1)
        total = -total;
    return total;
}

} // namespace detail

/// Sum over all permutations of the products of selected entries.
inline BigInt permanent_naive(const IntMatrix& m)
{
    detail::require_square(m, "permanent_naive");
    const std::size_t n = m.rows();
    if (n > kNaivePermanentLimit)
        throw std::length_error("permanent_naive: size " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kNaivePermanentLimit));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    BigInt total = 0;
    do {
        BigInt term = 1;
        for (std::size_t r = 0; r < n && term != 0; ++r)
            term *= m(r, perm[r]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

enum class RyserKernel { Automatic, Int128, BigInt };

/// Ryser's formula with subsets visited in Gray-code order, so each step
/// updates the row sums by a single column. Uses a 128-bit kernel when the
/// entries provably cannot overflow it.
inline BigInt permanent_ryser(const IntMatrix& m, RyserKernel kernel = RyserKernel::Automatic)
{
    detail::require_square(m, "permanent_ryser");
    const std::size_t n = m.rows();
    if (n > kRyserPermanentLimit)
        throw std::length_error("permanent_ryser: size " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kRyserPermanentLimit));
    if (n == 0)
        return 1;
    switch (kernel) {
    case RyserKernel::Int128:
        if (!detail::ryser_fits_int128(m))
            throw std::overflow_error("permanent_ryser: entries too large for the 128-bit kernel");
        return detail::ryser_int128(m);
    case RyserKernel::BigInt:
        return detail::ryser_bigint(m);
    case RyserKernel::Automatic:
        break;
    }
    return detail::ryser_fits_int128(m) ? detail::ryser_int128(m) : detail::ryser_bigint(m);
}

inline BigInt permanent(const IntMatrix& m)
{
    detail::require_square(m, "permanent");
    if (m.rows() <= kPermanentDispatchThreshold)
        return permanent_naive(m);
    return permanent_ryser(m);
}

/// Copy of `m` with column `c` replaced.
inline IntMatrix with_column(IntMatrix m, std::size_t c, const std::vector<BigInt>& values)
{
    m.set_column(c, values);
    return m;
}

} // namespace hyperweight
