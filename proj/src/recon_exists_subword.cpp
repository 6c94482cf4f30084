#include "wordrec/recon_exists_subword.hpp"

#include <cassert>

namespace wordrec {

namespace {

bool ask_power(OracleSession& session, Letter alpha, std::uint64_t i) {
    return session.ask_exists_subword(repeated(alpha, i));
}

// Largest c in [lo, hi] with alpha^c a subword; alpha^lo is already known to
// be one. Uses ceil(log2(hi+1-lo)) queries.
std::uint64_t power_binary_search(OracleSession& session, Letter alpha, std::uint64_t lo,
                                  std::uint64_t hi) {
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (ask_power(session, alpha, mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

LetterCountResult count_letter_occurrences(OracleSession& session, Letter alpha,
                                           std::optional<std::uint64_t> n) {
    std::uint64_t before = session.queries_asked();
    LetterCountResult res;
    res.letter = alpha;
    if (n) {
        res.count = power_binary_search(session, alpha, 0, *n);
    } else {
        // Doubling phase: first i with a negative answer is M; then the count
        // lies in [M/2, M-1].
        std::uint64_t m = 1;
        while (ask_power(session, alpha, m)) m *= 2;
        res.count = (m == 1) ? 0 : power_binary_search(session, alpha, m / 2, m - 1);
    }
    res.queries_used = session.queries_asked() - before;
    return res;
}

Word merge_two_projections(OracleSession& session, const Word& u, const Word& v) {
    MergeState st;
    st.p.reserve(u.size() + v.size());
    while (st.i < u.size() && st.j < v.size()) {
        Word q = st.p;
        q.push_back(u[st.i]);
        q.insert(q.end(), v.begin() + static_cast<std::ptrdiff_t>(st.j), v.end());
        if (session.ask_exists_subword(q))
            st.p.push_back(u[st.i++]);
        else
            st.p.push_back(v[st.j++]);
    }
    st.p.insert(st.p.end(), u.begin() + static_cast<std::ptrdiff_t>(st.i), u.end());
    st.p.insert(st.p.end(), v.begin() + static_cast<std::ptrdiff_t>(st.j), v.end());
    return st.p;
}

Word merge_projection_with_letter(OracleSession& session, const Word& u, Letter a) {
    Word p;
    std::size_t j = 0;
    for (;;) {
        Word q = p;
        q.push_back(a);
        q.insert(q.end(), u.begin() + static_cast<std::ptrdiff_t>(j), u.end());
        if (session.ask_exists_subword(q)) {
            p.push_back(a);
        } else if (j < u.size()) {
            p.push_back(u[j++]);
        } else {
            return p;
        }
    }
}

Word reconstruct_projection(OracleSession& session, LetterSet B) {
    auto ls = B.letters();
    assert(ls.size() >= 2);
    if (ls.size() == 2) {
        auto cnt = count_letter_occurrences(session, ls[0]);
        return merge_projection_with_letter(session, repeated(ls[0], cnt.count), ls[1]);
    }
    if (ls.size() == 3) {
        Word pair = reconstruct_projection(session, LetterSet{ls[0], ls[1]});
        return merge_projection_with_letter(session, pair, ls[2]);
    }
    LetterSet lower, upper;
    for (std::size_t i = 0; i < ls.size(); ++i)
        (i < ls.size() / 2 ? lower : upper).add(ls[i]);
    Word u = reconstruct_projection(session, lower);
    Word v = reconstruct_projection(session, upper);
    return merge_two_projections(session, u, v);
}

Word reconstruct_exists_subword(OracleSession& session) {
    unsigned k = session.alphabet().size;
    if (k == 1) {
        auto cnt = count_letter_occurrences(session, 0);
        return repeated(0, cnt.count);
    }
    return reconstruct_projection(session, LetterSet::full(k));
}

}  // namespace wordrec
