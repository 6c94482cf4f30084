#ifndef WORDREC_BOUNDS_HPP
#define WORDREC_BOUNDS_HPP

#include <cstdint>

namespace wordrec {

// Integer-exact log helpers (x >= 1).
std::uint64_t floor_log2(std::uint64_t x);
std::uint64_t ceil_log2(std::uint64_t x);

// ceil(sqrt(n * max(1, log2 n))); also the "large block" threshold m of the
// worst-case count-subword strategy.
std::uint64_t ceil_sqrt_n_log_n(std::uint64_t n);

// ceil(2 * log2 n), clamped to at least 1; the run-length assumption of the
// average-case strategy.
std::uint64_t avgcase_block_threshold(std::uint64_t n);

// ceil(log2(n) / 2) for n >= 1, i.e. the least c with 4^c >= n.
std::uint64_t ceil_half_log2(std::uint64_t n);

// ceil(4 * sqrt(n)).
std::uint64_t ceil_4_sqrt(std::uint64_t n);
// ceil(sqrt(n)).
std::uint64_t ceil_sqrt(std::uint64_t n);

// Worst-case query budgets certified by the harness.
std::uint64_t theorem1_bound(std::uint64_t n);                       // binary, count-subword
std::uint64_t corollary6_bound(std::uint64_t n, unsigned k);         // k-ary, count-subword
std::uint64_t theorem7_bound(std::uint64_t n, unsigned k);           // exists-subword
std::uint64_t theorem16_bound(std::uint64_t n, unsigned k);          // exists-factor, n known

// Per-phase budgets of the exists-factor strategy.
std::uint64_t lemma12_bound(std::uint64_t n, std::uint64_t s_len, unsigned k);
std::uint64_t lemma13_bound(std::uint64_t s_len, unsigned k);
std::uint64_t lemma14_bound(std::uint64_t n, std::uint64_t s_len, std::uint64_t t, unsigned k);
std::uint64_t lemma15_bound(std::uint64_t x, std::uint64_t y);

// Block-location budget: 2 * w_zeros * ceil(log2(w_ones+1)) / m, as a real
// number; callers compare queries * m against the numerator.
bool within_lemma5_bound(std::uint64_t queries, std::uint64_t w_zeros, std::uint64_t w_ones,
                         std::uint64_t m);

// Letter-count budgets (exists-subword).
std::uint64_t lemma8_bound_unknown_n(std::uint64_t letter_count);
std::uint64_t lemma8_bound_known_n(std::uint64_t n);

}  // namespace wordrec

#endif
