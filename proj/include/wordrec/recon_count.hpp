#ifndef WORDREC_RECON_COUNT_HPP
#define WORDREC_RECON_COUNT_HPP

#include <map>
#include <optional>
#include <vector>

#include "wordrec/oracle.hpp"

namespace wordrec {

// Signals a count that is inconsistent with the decoder's admissibility
// bounds (invalid query answer or malformed instance).
class DecodeFailure : public std::runtime_error {
public:
    explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

class InconsistentProjections : public std::runtime_error {
public:
    explicit InconsistentProjections(const std::string& what) : std::runtime_error(what) {}
};

// Inverts N = sum_{j=1..r} s_j * C(ell+j-1, ell) by repeated floor division
// from j = r down to 1, valid when every s_j < (ell+1)/r. Returns (s_1..s_r).
std::vector<std::uint64_t> decode_small_blocks(const BigCount& n_value, unsigned r,
                                               std::uint64_t ell);

// Recovers all r block lengths of w = p 0^{s_r} 1 ... 0^{s_1} 1 v from the
// query answer C(w, 0 1^{1+|v|_1}), given the prefix p and the already-known
// (large) lengths; knowns maps j in [1, r] to s_j.
std::vector<std::uint64_t> decode_group_with_knowns(const BigCount& count, const Word& prefix,
                                                    std::uint64_t v_ones, unsigned r,
                                                    const std::map<unsigned, std::uint64_t>& knowns);

// Indices i with s_i >= m, found by recursive interval splitting; needs the
// letter counts of the hidden word. Session must be in CountSubword model.
std::vector<std::uint64_t> locate_large_blocks(OracleSession& session, std::uint64_t m,
                                               std::uint64_t w_zeros, std::uint64_t w_ones);

// Exact length of 0-block i via the single query C(w, 1^i 0 1^{w_ones - i}).
std::uint64_t query_block_length(OracleSession& session, std::uint64_t i, std::uint64_t w_ones);

// Worst-case binary reconstruction (phases: letter counts, large-block
// location, grouped decoding of the two halves).
Word reconstruct_binary_count(OracleSession& session);

struct AvgcaseOutcome {
    Word word;
    bool fallback_taken = false;
};

// Average-case strategy for a known length: optimistic grouped decoding under
// a no-long-run assumption, one verification query, worst-case fallback.
AvgcaseOutcome reconstruct_binary_avgcase(OracleSession& session, std::uint64_t n);

// Unique word consistent with one projection per unordered pair of distinct
// letters, merged greedily left to right.
Word merge_pairwise_projections(const std::map<std::pair<Letter, Letter>, Word>& projections,
                                Alphabet alphabet);

// Binary strategy once per letter pair through the full-word oracle, then a
// pairwise-projection merge.
Word reconstruct_kary_count(OracleSession& session);

}  // namespace wordrec

#endif
