#include "wordrec/recon_exists_factor.hpp"

#include <cassert>

#include "wordrec/bounds.hpp"

namespace wordrec {

namespace {

bool ask_with_suffix(OracleSession& session, const Word& base, Letter l) {
    Word q = base;
    q.push_back(l);
    return session.ask_exists_factor(q);
}

// Largest r with v alpha^r a factor, given that v is a factor and
// v alpha^{cap} is known (without asking) not to be one.
std::uint64_t resolve_alpha_run(OracleSession& session, const Word& v, Letter alpha,
                                std::uint64_t cap) {
    std::uint64_t r = 0;
    while (r + 1 < cap) {
        Word q = concat(v, repeated(alpha, r + 1));
        if (!session.ask_exists_factor(q)) break;
        ++r;
    }
    return r;
}

}  // namespace

std::uint64_t max_power(OracleSession& session, Letter alpha, PowerSearchInterval interval) {
    std::uint64_t x = interval.x, y = interval.y;
    while (x < y) {
        std::uint64_t mid = x + (y - x + 1) / 2;  // ceil((x+y)/2)
        if (session.ask_exists_factor(repeated(alpha, mid)))
            x = mid;
        else
            y = mid - 1;
    }
    return x;
}

NreFactor find_nre_factor_linear(OracleSession& session, Letter alpha, std::uint64_t t,
                                 std::optional<std::uint64_t> n) {
    unsigned k = session.alphabet().size;
    Word sigma = repeated(alpha, t);
    std::uint64_t speculative = 0;  // trailing alphas not yet confirmed
    for (;;) {
        if (n && sigma.size() - speculative >= *n) {
            sigma.resize(*n);
            return {std::move(sigma), alpha, t};
        }
        bool extended = false;
        for (Letter b = 0; b < k && !extended; ++b) {
            if (b == alpha) continue;
            if (ask_with_suffix(session, sigma, b)) {
                sigma.push_back(b);
                speculative = 0;
                extended = true;
            }
        }
        if (extended) continue;
        sigma.push_back(alpha);
        if (++speculative == t + 1) {
            // sigma = v alpha^{t+1} cannot be a factor: contradiction reached,
            // resolve the true run length.
            Word v(sigma.begin(), sigma.end() - static_cast<std::ptrdiff_t>(t + 1));
            std::uint64_t r = resolve_alpha_run(session, v, alpha, t + 1);
            return {concat(v, repeated(alpha, r)), alpha, t};
        }
    }
}

NreFactor find_nre_factor_checkpointed(OracleSession& session, Letter alpha, std::uint64_t t,
                                       std::uint64_t n) {
    assert(t >= 1);
    unsigned k = session.alphabet().size;
    std::uint64_t m = ceil_sqrt(n);
    Word sigma = repeated(alpha, t);
    std::uint64_t speculative = 0;
    for (;;) {
        if (sigma.size() - speculative >= n) {
            sigma.resize(n);
            return {std::move(sigma), alpha, t};
        }
        bool extended = false;
        for (Letter b = 0; b < k && !extended; ++b) {
            if (b == alpha) continue;
            if (ask_with_suffix(session, sigma, b)) {
                sigma.push_back(b);
                speculative = 0;
                extended = true;
            }
        }
        if (extended) continue;
        sigma.push_back(alpha);
        if (++speculative == m) {
            if (session.ask_exists_factor(sigma)) {
                speculative = 0;
            } else {
                Word v(sigma.begin(), sigma.end() - static_cast<std::ptrdiff_t>(m));
                std::uint64_t r = resolve_alpha_run(session, v, alpha, m);
                return {concat(v, repeated(alpha, r)), alpha, t};
            }
        }
    }
}

Word extend_left(OracleSession& session, const Word& s, std::uint64_t n, Alphabet alphabet) {
    Word cur = s;
    while (cur.size() < n) {
        Letter next = 0;  // forced when every other letter tests negative
        for (Letter b = 1; b < alphabet.size; ++b) {
            Word q;
            q.reserve(cur.size() + 1);
            q.push_back(b);
            q.insert(q.end(), cur.begin(), cur.end());
            if (session.ask_exists_factor(q)) {
                next = b;
                break;
            }
        }
        cur.insert(cur.begin(), next);
    }
    return cur;
}

FactorReport reconstruct_exists_factor_report(OracleSession& session, std::uint64_t n) {
    FactorReport rep;
    unsigned k = session.alphabet().size;
    if (k == 1 || n == 0) {
        rep.word = repeated(0, n);
        return rep;
    }
    const Letter alpha = 0;
    std::uint64_t q0 = ceil_4_sqrt(n);
    std::uint64_t mark = session.queries_asked();

    bool long_run = session.ask_exists_factor(repeated(alpha, q0));
    rep.q_initial = session.queries_asked() - mark;
    mark = session.queries_asked();

    rep.interval = long_run ? PowerSearchInterval{q0, n} : PowerSearchInterval{0, q0 - 1};
    rep.t = max_power(session, alpha, rep.interval);
    rep.q_maxpower = session.queries_asked() - mark;
    mark = session.queries_asked();

    NreFactor nre;
    if (long_run) {
        rep.checkpointed = true;
        nre = find_nre_factor_checkpointed(session, alpha, rep.t, n);
    } else {
        nre = find_nre_factor_linear(session, alpha, rep.t, n);
    }
    rep.q_nre = session.queries_asked() - mark;
    rep.s_len = nre.s.size();
    mark = session.queries_asked();

    rep.word = extend_left(session, nre.s, n, session.alphabet());
    rep.q_extend = session.queries_asked() - mark;
    return rep;
}

Word reconstruct_exists_factor(OracleSession& session, std::uint64_t n) {
    return reconstruct_exists_factor_report(session, n).word;
}

}  // namespace wordrec
