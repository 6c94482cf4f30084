#include "wordrec/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace wordrec {

std::uint64_t floor_log2(std::uint64_t x) {
    return static_cast<std::uint64_t>(std::bit_width(x)) - 1;
}

std::uint64_t ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

std::uint64_t ceil_sqrt_n_log_n(std::uint64_t n) {
    if (n == 0) return 0;
    long double v = static_cast<long double>(n) *
                    std::max<long double>(1.0L, std::log2(static_cast<long double>(n)));
    auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(v)));
    while (m > 0 && static_cast<long double>(m - 1) * static_cast<long double>(m - 1) >= v) --m;
    while (static_cast<long double>(m) * static_cast<long double>(m) < v) ++m;
    return m;
}

std::uint64_t avgcase_block_threshold(std::uint64_t n) {
    if (n <= 1) return 1;
    // ceil(2 log2 n) = ceil(log2 n^2)
    return std::max<std::uint64_t>(1, ceil_log2(n * n));
}

std::uint64_t ceil_half_log2(std::uint64_t n) {
    std::uint64_t c = 0;
    unsigned __int128 pow4 = 1;
    while (pow4 < n) {
        pow4 *= 4;
        ++c;
    }
    return c;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<long double>(n))));
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    while (r * r < n) ++r;
    return r;
}

std::uint64_t ceil_4_sqrt(std::uint64_t n) {
    return ceil_sqrt(16 * n);
}

std::uint64_t theorem1_bound(std::uint64_t n) {
    return 7 * ceil_sqrt_n_log_n(n) + 4;
}

std::uint64_t corollary6_bound(std::uint64_t n, unsigned k) {
    std::uint64_t pairs = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    return pairs * theorem1_bound(n);
}

std::uint64_t theorem7_bound(std::uint64_t n, unsigned k) {
    return n * ceil_log2(k) + k * (2 + floor_log2(n + 1));
}

std::uint64_t theorem16_bound(std::uint64_t n, unsigned k) {
    return (k - 1) * (n + 2) + ceil_half_log2(n) + 3;
}

std::uint64_t lemma12_bound(std::uint64_t n, std::uint64_t s_len, unsigned k) {
    return (k - 1) * (n - s_len);
}

std::uint64_t lemma13_bound(std::uint64_t s_len, unsigned k) {
    return (k - 1) * (s_len + 2);
}

std::uint64_t lemma14_bound(std::uint64_t n, std::uint64_t s_len, std::uint64_t t, unsigned k) {
    return (k - 1) * (s_len - t) + k * ceil_sqrt(n) + 1;
}

std::uint64_t lemma15_bound(std::uint64_t x, std::uint64_t y) {
    return ceil_log2(y + 1 - x);
}

bool within_lemma5_bound(std::uint64_t queries, std::uint64_t w_zeros, std::uint64_t w_ones,
                         std::uint64_t m) {
    return queries * m <= 2 * w_zeros * ceil_log2(w_ones + 1);
}

std::uint64_t lemma8_bound_unknown_n(std::uint64_t letter_count) {
    return 2 * (1 + floor_log2(letter_count + 1));
}

std::uint64_t lemma8_bound_known_n(std::uint64_t n) {
    return ceil_log2(n + 1);
}

}  // namespace wordrec
