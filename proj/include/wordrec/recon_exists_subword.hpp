#ifndef WORDREC_RECON_EXISTS_SUBWORD_HPP
#define WORDREC_RECON_EXISTS_SUBWORD_HPP

#include <cstdint>
#include <optional>

#include "wordrec/oracle.hpp"

namespace wordrec {

struct LetterCountResult {
    Letter letter = 0;
    std::uint64_t count = 0;
    std::uint64_t queries_used = 0;
};

// Cursor state of the two-projection merge: p is the confirmed prefix
// w[1..i+j], i and j index into the projections being interleaved.
struct MergeState {
    Word p;
    std::size_t i = 0;
    std::size_t j = 0;
};

// |w|_alpha by binary search over powers alpha^i. With n known: search [0, n],
// at most ceil(log2(n+1)) queries. With n unknown: double i until a negative
// answer at i = M, then search [M/2, M-1]; at most 2*floor(1+log2(count+1))
// queries, and exactly one query when alpha does not occur.
LetterCountResult count_letter_occurrences(OracleSession& session, Letter alpha,
                                           std::optional<std::uint64_t> n = std::nullopt);

// Recovers the interleaving w of two projections over disjoint sub-alphabets:
// each query tests whether p u[i+1] v[j+1..] is a subword. At most |u|+|v|-1
// queries.
Word merge_two_projections(OracleSession& session, const Word& u, const Word& v);

// Inserts the occurrences of letter a into u = projection of w onto the other
// letters; exactly |result|+1 queries.
Word merge_projection_with_letter(OracleSession& session, const Word& u, Letter a);

// Projection of the hidden word onto B (|B| >= 2), by recursive alphabet
// halving down to pair/triple base cases.
Word reconstruct_projection(OracleSession& session, LetterSet B);

// Full reconstruction, length unknown; at most
// n*ceil(log2 k) + k*(2+floor(log2(n+1))) queries for k >= 2.
Word reconstruct_exists_subword(OracleSession& session);

}  // namespace wordrec

#endif
