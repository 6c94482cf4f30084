#include "wordrec/recon_count.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "wordrec/bounds.hpp"
#include "wordrec/counting.hpp"

namespace wordrec {

namespace {

// Adaptor that lets the binary strategy run unchanged over a letter pair of a
// larger alphabet (projection transparency), with the 0/1 roles optionally
// exchanged and the word optionally reversed (reversal commutes with subword
// counting, so reversing every query word simulates the reversed hidden word).
struct BinaryCountView {
    OracleSession* session;
    Letter zero = 0;
    Letter one = 1;
    bool rev = false;

    BigCount count(const Word& logical) const {
        Word q;
        q.reserve(logical.size());
        if (rev) {
            for (auto it = logical.rbegin(); it != logical.rend(); ++it)
                q.push_back(*it == 0 ? zero : one);
        } else {
            for (Letter l : logical) q.push_back(l == 0 ? zero : one);
        }
        return session->ask_count_subword(q);
    }

    BinaryCountView swapped() const { return {session, one, zero, rev}; }
    BinaryCountView flipped() const { return {session, zero, one, !rev}; }
};

Word make_logical(std::uint64_t leading_ones, std::uint64_t zeros, std::uint64_t trailing_ones) {
    Word u;
    u.reserve(leading_ones + zeros + trailing_ones);
    u.insert(u.end(), leading_ones, Letter{1});
    u.insert(u.end(), zeros, Letter{0});
    u.insert(u.end(), trailing_ones, Letter{1});
    return u;
}

// C(p 1^{extra_ones}, 0 1^q) from the block structure of p: every zero of
// block i sees (|p|_1 - i) + extra_ones ones to its right.
BigCount prefix_contribution(const std::vector<std::uint64_t>& pblocks, std::uint64_t extra_ones,
                             std::uint64_t q) {
    BigCount acc = 0;
    std::uint64_t t = extra_ones;
    BigCount bin = binomial(t, q);
    for (std::size_t i = pblocks.size(); i-- > 0;) {
        if (t >= q && pblocks[i] != 0)
            mpz_addmul_ui(acc.get_mpz_t(), bin.get_mpz_t(), pblocks[i]);
        ++t;
        if (t == q) {
            bin = 1;
        } else if (t > q) {
            mpz_mul_ui(bin.get_mpz_t(), bin.get_mpz_t(), t);
            mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), t - q);
        }
    }
    return acc;
}

std::vector<std::uint64_t> group_decode_core(const BigCount& count,
                                             const std::vector<std::uint64_t>& pblocks,
                                             std::uint64_t v_ones, unsigned r,
                                             const std::map<unsigned, std::uint64_t>& knowns) {
    if (r < 1 || r > v_ones + 2) throw std::invalid_argument("group decode: r out of range");
    BigCount adjusted = count;
    adjusted -= prefix_contribution(pblocks, r + v_ones, 1 + v_ones);
    for (const auto& [j, len] : knowns) {
        if (j < 1 || j > r) throw std::invalid_argument("group decode: known index out of range");
        BigCount term = binomial(j + v_ones, 1 + v_ones);
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), len);
        adjusted -= term;
    }
    if (adjusted < 0) throw DecodeFailure("group decode: contributions exceed the query answer");
    auto blocks = decode_small_blocks(adjusted, r, 1 + v_ones);
    for (const auto& [j, len] : knowns) {
        if (blocks[j - 1] != 0)
            throw DecodeFailure("group decode: residual mass at a known block index");
        blocks[j - 1] = len;
    }
    return blocks;
}

std::uint64_t query_block_length_core(const BinaryCountView& view, std::uint64_t i,
                                      std::uint64_t w_ones) {
    return to_u64(view.count(make_logical(i, 1, w_ones - i)));
}

void recblocks(const BinaryCountView& view, std::uint64_t m, std::uint64_t w_ones,
               std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
    if (view.count(make_logical(lo, m, w_ones - hi)) >= 1) {
        if (lo == hi) {
            out.push_back(lo);
        } else {
            std::uint64_t mid = (lo + hi) / 2;
            recblocks(view, m, w_ones, lo, mid, out);
            recblocks(view, m, w_ones, mid + 1, hi, out);
        }
    }
}

std::vector<std::uint64_t> locate_core(const BinaryCountView& view, std::uint64_t m,
                                       std::uint64_t w_ones) {
    std::vector<std::uint64_t> out;
    recblocks(view, m, w_ones, 0, w_ones, out);
    return out;
}

// Resolves block indices 0..upto of the word seen by `view`, one group of at
// most `group_size` blocks per query. Storage indices are in the forward
// orientation; rev_index remaps when the view is the reversed word.
void resolve_half(const BinaryCountView& view, std::uint64_t m1, std::uint64_t group_size,
                  std::uint64_t upto, std::vector<std::uint64_t>& blocks, std::vector<char>& known,
                  bool rev_index) {
    auto idx = [&](std::uint64_t i) { return rev_index ? m1 - i : i; };
    if (group_size == 0) {
        for (std::uint64_t i = 0; i <= upto; ++i) {
            if (!known[idx(i)]) {
                blocks[idx(i)] = query_block_length_core(view, i, m1);
                known[idx(i)] = 1;
            }
        }
        return;
    }
    std::vector<std::uint64_t> pblocks;  // blocks of the confirmed prefix, view orientation
    std::uint64_t c = 0;
    while (c <= upto) {
        std::uint64_t rs = std::min(group_size, upto - c + 1);
        bool all_known = true;
        for (std::uint64_t i = c; i < c + rs; ++i) all_known &= (known[idx(i)] != 0);
        if (!all_known) {
            std::uint64_t v_ones = m1 - c - rs;
            BigCount ans = view.count(make_logical(0, 1, 1 + v_ones));
            std::map<unsigned, std::uint64_t> group_knowns;
            for (std::uint64_t j = 1; j <= rs; ++j) {
                std::uint64_t i = c + rs - j;
                if (known[idx(i)]) group_knowns[static_cast<unsigned>(j)] = blocks[idx(i)];
            }
            // Each confirmed block is followed by its 1, so the prefix word
            // decomposes as (t_0, ..., t_{c-1}, 0).
            std::vector<std::uint64_t> padded = pblocks;
            padded.push_back(0);
            auto dec = group_decode_core(ans, padded, v_ones, static_cast<unsigned>(rs),
                                         group_knowns);
            for (std::uint64_t j = 1; j <= rs; ++j) {
                std::uint64_t i = c + rs - j;
                if (!known[idx(i)]) {
                    blocks[idx(i)] = dec[j - 1];
                    known[idx(i)] = 1;
                }
            }
        }
        for (std::uint64_t i = c; i < c + rs; ++i) pblocks.push_back(blocks[idx(i)]);
        c += rs;
    }
}

Word map_from_view(const Word& logical, const BinaryCountView& view) {
    Word out;
    out.reserve(logical.size());
    for (Letter l : logical) out.push_back(l == 0 ? view.zero : view.one);
    return out;
}

// Full worst-case reconstruction through a view; counts may be supplied when
// the caller already spent the two letter-count queries.
Word reconstruct_binary_via(const BinaryCountView& view,
                            std::optional<std::pair<std::uint64_t, std::uint64_t>> counts) {
    std::uint64_t n0, n1;
    if (counts) {
        n0 = counts->first;
        n1 = counts->second;
    } else {
        n0 = to_u64(view.count(Word{0}));
        n1 = to_u64(view.count(Word{1}));
    }
    if (n1 == 0) return map_from_view(Word(n0, Letter{0}), view);
    if (n0 == 0) return map_from_view(Word(n1, Letter{1}), view);

    BinaryCountView v = view;
    bool swapped_roles = false;
    if (n0 < n1) {  // make 0 the majority letter
        v = view.swapped();
        std::swap(n0, n1);
        swapped_roles = true;
    }
    std::uint64_t n = n0 + n1;
    std::uint64_t m = std::max<std::uint64_t>(1, ceil_sqrt_n_log_n(n));

    std::vector<std::uint64_t> blocks(n1 + 1, 0);
    std::vector<char> known(n1 + 1, 0);
    for (std::uint64_t i : locate_core(v, m, n1)) {
        blocks[i] = query_block_length_core(v, i, n1);
        known[i] = 1;
    }

    std::uint64_t group_size = n1 / (2 * m);
    std::uint64_t upto = n1 / 2;
    resolve_half(v, n1, group_size, upto, blocks, known, false);
    resolve_half(v.flipped(), n1, group_size, upto, blocks, known, true);

    Word logical = compose_from_blocks(blocks);
    if (swapped_roles)
        for (Letter& l : logical) l ^= 1;
    return map_from_view(logical, view);
}

void require_binary(const OracleSession& session) {
    if (session.alphabet().size != 2)
        throw std::invalid_argument("binary strategy needs an alphabet of size 2");
}

}  // namespace

std::vector<std::uint64_t> decode_small_blocks(const BigCount& n_value, unsigned r,
                                               std::uint64_t ell) {
    if (r < 1 || r > ell + 1) throw std::invalid_argument("decode_small_blocks: need 1 <= r <= ell+1");
    if (n_value < 0) throw DecodeFailure("decode_small_blocks: negative count");
    // Denominators C(ell+j-1, j-1) for j = 1..r, built incrementally.
    std::vector<BigCount> denom(r);
    denom[0] = 1;
    for (unsigned j = 2; j <= r; ++j) {
        denom[j - 1] = denom[j - 2];
        mpz_mul_ui(denom[j - 1].get_mpz_t(), denom[j - 1].get_mpz_t(), ell + j - 1);
        mpz_divexact_ui(denom[j - 1].get_mpz_t(), denom[j - 1].get_mpz_t(), j - 1);
    }
    std::vector<std::uint64_t> s(r, 0);
    BigCount cur = n_value;
    BigCount quot;
    for (unsigned j = r; j >= 1; --j) {
        mpz_fdiv_q(quot.get_mpz_t(), cur.get_mpz_t(), denom[j - 1].get_mpz_t());
        // admissibility: s_j < (ell+1)/r, i.e. s_j * r <= ell
        if (quot * r > ell)
            throw DecodeFailure("decode_small_blocks: recovered exponent exceeds its bound");
        s[j - 1] = to_u64(quot);
        mpz_submul_ui(cur.get_mpz_t(), denom[j - 1].get_mpz_t(), s[j - 1]);
    }
    assert(cur == 0);
    return s;
}

std::vector<std::uint64_t> decode_group_with_knowns(
    const BigCount& count, const Word& prefix, std::uint64_t v_ones, unsigned r,
    const std::map<unsigned, std::uint64_t>& knowns) {
    return group_decode_core(count, block_decomposition(prefix), v_ones, r, knowns);
}

std::vector<std::uint64_t> locate_large_blocks(OracleSession& session, std::uint64_t m,
                                               std::uint64_t /*w_zeros*/, std::uint64_t w_ones) {
    BinaryCountView view{&session};
    return locate_core(view, m, w_ones);
}

std::uint64_t query_block_length(OracleSession& session, std::uint64_t i, std::uint64_t w_ones) {
    BinaryCountView view{&session};
    return query_block_length_core(view, i, w_ones);
}

Word reconstruct_binary_count(OracleSession& session) {
    require_binary(session);
    return reconstruct_binary_via(BinaryCountView{&session}, std::nullopt);
}

AvgcaseOutcome reconstruct_binary_avgcase(OracleSession& session, std::uint64_t n) {
    require_binary(session);
    BinaryCountView view{&session};
    std::uint64_t n0 = to_u64(view.count(Word{0}));
    std::uint64_t n1 = to_u64(view.count(Word{1}));
    if (n0 + n1 != n) throw std::invalid_argument("reconstruct_binary_avgcase: wrong length");
    if (n1 == 0) return {Word(n0, Letter{0}), false};
    if (n0 == 0) return {Word(n1, Letter{1}), false};

    BinaryCountView v = view;
    std::uint64_t z = n0, o = n1;
    bool swapped_roles = false;
    if (z < o) {
        v = view.swapped();
        std::swap(z, o);
        swapped_roles = true;
    }
    std::uint64_t m = avgcase_block_threshold(n);
    bool ok = false;
    Word candidate;
    try {
        std::vector<std::uint64_t> blocks(o + 1, 0);
        std::vector<char> known(o + 1, 0);
        std::uint64_t group_size = o / (2 * m);
        std::uint64_t upto = o / 2;
        resolve_half(v, o, group_size, upto, blocks, known, false);
        resolve_half(v.flipped(), o, group_size, upto, blocks, known, true);
        // A recovered block of length >= m contradicts the run-length
        // assumption, so the candidate is not trusted even if it sums right.
        bool runs_ok = std::all_of(blocks.begin(), blocks.end(),
                                   [m](std::uint64_t b) { return b < m; });
        std::uint64_t zeros = std::accumulate(blocks.begin(), blocks.end(), std::uint64_t{0});
        if (runs_ok && zeros == z) {
            candidate = compose_from_blocks(blocks);
            // |candidate| = n, so a single positive count query certifies equality.
            ok = (v.count(candidate) >= 1);
        }
    } catch (const DecodeFailure&) {
        ok = false;
    }
    if (ok) return {map_from_view(candidate, v), false};
    return {reconstruct_binary_via(view, std::make_pair(n0, n1)), true};
}

Word merge_pairwise_projections(const std::map<std::pair<Letter, Letter>, Word>& projections,
                                Alphabet alphabet) {
    unsigned k = alphabet.size;
    if (k < 2) throw std::invalid_argument("merge_pairwise_projections: need k >= 2");
    auto key = [](Letter a, Letter b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const auto& [pr, w] : projections) {
        if (pr.first >= pr.second || pr.second >= k)
            throw std::invalid_argument("merge_pairwise_projections: bad letter pair");
        for (Letter l : w)
            if (l != pr.first && l != pr.second)
                throw std::invalid_argument("merge_pairwise_projections: projection has foreign letter");
    }

    // Cross-validate letter counts before merging.
    std::vector<std::uint64_t> remaining(k, 0);
    for (Letter a = 0; a < k; ++a) {
        bool first = true;
        for (Letter b = 0; b < k; ++b) {
            if (a == b) continue;
            auto it = projections.find(key(a, b));
            if (it == projections.end())
                throw std::invalid_argument("merge_pairwise_projections: missing pair projection");
            std::uint64_t cnt = count_letter(it->second, a);
            if (first) {
                remaining[a] = cnt;
                first = false;
            } else if (remaining[a] != cnt) {
                throw InconsistentProjections("letter counts disagree across pair projections");
            }
        }
    }

    std::map<std::pair<Letter, Letter>, std::size_t> cursor;
    for (const auto& [pr, w] : projections) cursor[pr] = 0;

    std::uint64_t total = std::accumulate(remaining.begin(), remaining.end(), std::uint64_t{0});
    Word out;
    out.reserve(total);
    for (std::uint64_t step = 0; step < total; ++step) {
        int pick = -1;
        for (Letter a = 0; a < k; ++a) {
            if (remaining[a] == 0) continue;
            bool fronted = true;
            for (Letter b = 0; b < k && fronted; ++b) {
                if (b == a || remaining[b] == 0) continue;
                const Word& w = projections.at(key(a, b));
                std::size_t cur = cursor[key(a, b)];
                fronted = (cur < w.size() && w[cur] == a);
            }
            if (fronted) {
                if (pick >= 0) throw InconsistentProjections("ambiguous next letter");
                pick = a;
            }
        }
        if (pick < 0) throw InconsistentProjections("no letter can come next");
        auto a = static_cast<Letter>(pick);
        out.push_back(a);
        --remaining[a];
        for (Letter b = 0; b < k; ++b) {
            if (b == a) continue;
            auto pr = key(a, b);
            const Word& w = projections.at(pr);
            std::size_t& cur = cursor[pr];
            if (cur >= w.size() || w[cur] != a)
                throw InconsistentProjections("projection front disagrees with emitted letter");
            ++cur;
        }
    }
    for (const auto& [pr, w] : projections)
        if (cursor[pr] != w.size()) throw InconsistentProjections("unconsumed projection letters");
    return out;
}

Word reconstruct_kary_count(OracleSession& session) {
    unsigned k = session.alphabet().size;
    if (k == 1) {
        std::uint64_t n = to_u64(session.ask_count_subword(Word{0}));
        return Word(n, Letter{0});
    }
    std::map<std::pair<Letter, Letter>, Word> projections;
    for (Letter a = 0; a < k; ++a) {
        for (Letter b = a + 1; b < k; ++b) {
            BinaryCountView view{&session, a, b, false};
            projections[{a, b}] = reconstruct_binary_via(view, std::nullopt);
        }
    }
    if (k == 2) return projections.at({0, 1});
    return merge_pairwise_projections(projections, session.alphabet());
}

}  // namespace wordrec
