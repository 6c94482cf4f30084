#ifndef WORDREC_RECON_EXISTS_FACTOR_HPP
#define WORDREC_RECON_EXISTS_FACTOR_HPP

#include <cstdint>
#include <optional>

#include "wordrec/oracle.hpp"

namespace wordrec {

// A non-right-extendable factor of the hidden word: s occurs exactly once, is
// a suffix, and no s b is a factor. alpha is the anchor letter whose maximal
// power t drove the search.
struct NreFactor {
    Word s;
    Letter alpha = 0;
    std::uint64_t t = 0;
};

// Bracket [x, y] known to contain the true maximal alpha-power.
struct PowerSearchInterval {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
};

// Largest t with alpha^t a factor, by midpoint-ceil((x+y)/2) binary search;
// at most ceil(log2(y+1-x)) queries.
std::uint64_t max_power(OracleSession& session, Letter alpha, PowerSearchInterval interval);

// Speculative-extension NRE search: extend by any positive letter, append
// alpha on an all-negative round, and after t+1 consecutive all-negative
// rounds resolve the trailing alpha run linearly. At most (k-1)(|s|+2)
// queries. If n is supplied, stops as soon as the confirmed factor reaches
// length n.
NreFactor find_nre_factor_linear(OracleSession& session, Letter alpha, std::uint64_t t,
                                 std::optional<std::uint64_t> n = std::nullopt);

// Same search with a verification query after every ceil(sqrt(n)) consecutive
// speculative alphas; needs t >= 1. At most (k-1)(|s|-t) + k*ceil(sqrt(n)) + 1
// queries.
NreFactor find_nre_factor_checkpointed(OracleSession& session, Letter alpha, std::uint64_t t,
                                       std::uint64_t n);

// Completes the word by prepending one letter per round; a round asks b s for
// every b except letter 0, all-negative forces 0. At most (k-1)(n-|s|)
// queries.
Word extend_left(OracleSession& session, const Word& s, std::uint64_t n, Alphabet alphabet);

struct FactorReport {
    Word word;
    // Phase query counts: the opening power probe, the Lemma 15 search, the
    // NRE search, and the left extension.
    std::uint64_t q_initial = 0;
    std::uint64_t q_maxpower = 0;
    std::uint64_t q_nre = 0;
    std::uint64_t q_extend = 0;
    std::uint64_t t = 0;
    std::uint64_t s_len = 0;
    PowerSearchInterval interval;  // the bracket handed to max_power
    bool checkpointed = false;     // which NRE variant ran
};

// Known-length reconstruction per the sqrt-threshold split: probe alpha^ceil(4 sqrt n),
// pick the NRE variant by the answer, then extend left. At most
// (k-1)(n+2) + ceil(log2(n)/2) + 3 queries.
FactorReport reconstruct_exists_factor_report(OracleSession& session, std::uint64_t n);
Word reconstruct_exists_factor(OracleSession& session, std::uint64_t n);

}  // namespace wordrec

#endif
