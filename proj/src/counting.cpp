#include "wordrec/counting.hpp"

namespace wordrec {

BigCount count_subword_occurrences(const Word& w, const Word& u) {
    if (u.empty()) return 1;
    if (u.size() > w.size()) return 0;
    std::vector<BigCount> dp(u.size() + 1);
    dp[0] = 1;
    for (Letter c : w) {
        for (std::size_t j = u.size(); j >= 1; --j) {
            if (u[j - 1] == c) dp[j] += dp[j - 1];
        }
    }
    return dp[u.size()];
}

namespace {

struct Run {
    Letter letter;
    std::uint64_t len;
};

std::vector<Run> runs_of(const Word& u) {
    std::vector<Run> runs;
    for (Letter c : u) {
        if (!runs.empty() && runs.back().letter == c)
            ++runs.back().len;
        else
            runs.push_back({c, 1});
    }
    return runs;
}

// C(w, a^p b^m a^q) when the occurrence must use every a of w, i.e. p+q = |w|_a:
// the leading a's are pinned to the first p a's, the trailing to the last q,
// and the b^m block chooses m of the Z b's lying strictly between them.
bool count_pinned_outer(const Word& pw, Letter a, std::uint64_t p, std::uint64_t m,
                        std::uint64_t q, BigCount& out) {
    std::uint64_t total_a = count_letter(pw, a);
    if (p + q != total_a) return false;
    std::int64_t left = -1;
    std::int64_t right = static_cast<std::int64_t>(pw.size());
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < pw.size(); ++i) {
        if (pw[i] != a) continue;
        ++seen;
        if (seen == p) left = static_cast<std::int64_t>(i);
        if (q > 0 && seen == total_a - q + 1) {
            right = static_cast<std::int64_t>(i);
            break;
        }
    }
    std::uint64_t gap = static_cast<std::uint64_t>(right - left - 1);
    std::uint64_t z = gap - (total_a - q - p);
    out = binomial(z, m);
    return true;
}

// C(w, a^p b a^q) as a sum over the positions of b, with both binomial factors
// maintained incrementally while sweeping w left to right.
BigCount count_single_middle(const Word& pw, Letter a, std::uint64_t p, std::uint64_t q) {
    std::uint64_t total_a = count_letter(pw, a);
    BigCount acc = 0;
    if (p + q > total_a) return acc;
    std::uint64_t before = 0;
    std::uint64_t after = total_a;
    BigCount bin_left = (p == 0) ? 1 : 0;  // C(before, p)
    BigCount bin_right = binomial(after, q);
    for (Letter c : pw) {
        if (c == a) {
            ++before;
            if (before == p) {
                bin_left = 1;
            } else if (before > p) {
                mpz_mul_ui(bin_left.get_mpz_t(), bin_left.get_mpz_t(), before);
                mpz_divexact_ui(bin_left.get_mpz_t(), bin_left.get_mpz_t(), before - p);
            }
            if (after - 1 < q) break;  // every later b contributes zero
            mpz_mul_ui(bin_right.get_mpz_t(), bin_right.get_mpz_t(), after - q);
            mpz_divexact_ui(bin_right.get_mpz_t(), bin_right.get_mpz_t(), after);
            --after;
        } else {
            mpz_addmul(acc.get_mpz_t(), bin_left.get_mpz_t(), bin_right.get_mpz_t());
        }
    }
    return acc;
}

// C(x, m) maintained under unit steps of x; k is 0 whenever x < m.
struct BinTracker {
    std::uint64_t x = 0;
    std::uint64_t m = 0;
    BigCount k;

    void set(std::uint64_t x0, std::uint64_t m0) {
        x = x0;
        m = m0;
        k = binomial(x0, m0);
    }
    void inc() {
        ++x;
        if (x == m) {
            k = 1;
        } else if (x > m) {
            mpz_mul_ui(k.get_mpz_t(), k.get_mpz_t(), x);
            mpz_divexact_ui(k.get_mpz_t(), k.get_mpz_t(), x - m);
        }
    }
    void dec() {
        if (x >= m && x > 0) {
            // C(x-1, m) = C(x, m) * (x-m) / x; hits zero exactly at x = m
            mpz_mul_ui(k.get_mpz_t(), k.get_mpz_t(), x - m);
            mpz_divexact_ui(k.get_mpz_t(), k.get_mpz_t(), x);
        }
        --x;
    }
};

// C(pw, a^p b^m a^q) for a two-letter word pw, via the block structure of pw
// around the letter a: with Z_b = number of b-letters before the b-th a,
//   N = sum_{a_i < b_i} C(a_i - 1, p-1) * C(Z_{b_i} - Z_{a_i}, m) * C(M - b_i, q-1),
// where the p-th chosen leading a is the a_i-th a of pw and the first chosen
// trailing a is the b_i-th. All binomial factors are maintained incrementally;
// pairs with fewer than m b-letters between them are skipped by a two-pointer
// sweep, so the cost is proportional to the number of contributing pairs.
BigCount count_three_run(const Word& pw, Letter a, std::uint64_t p, std::uint64_t m,
                         std::uint64_t q) {
    std::uint64_t M = count_letter(pw, a);
    if (p + q > M) return 0;
    // blocks[i] = number of b-letters between the i-th and (i+1)-th a
    std::vector<std::uint64_t> blocks(M + 1, 0);
    std::uint64_t idx = 0;
    for (Letter c : pw) {
        if (c == a)
            ++idx;
        else
            ++blocks[idx];
    }
    std::uint64_t z = pw.size() - M;
    if (z < m) return 0;

    BigCount total = 0;
    if (q == 0) {
        // N = sum_a C(a-1, p-1) * C(z - Z_a, m); the remainder only shrinks,
        // so stop once it drops below m.
        BigCount f = 1;  // C(a-1, p-1) starting at a = p
        std::uint64_t rem = z;
        for (std::uint64_t i = 0; i < p; ++i) rem -= blocks[i];  // z - Z_p
        BinTracker k;
        k.set(rem, m);
        for (std::uint64_t ai = p; ai <= M; ++ai) {
            if (k.x < m) break;
            mpz_addmul(total.get_mpz_t(), f.get_mpz_t(), k.k.get_mpz_t());
            for (std::uint64_t s = 0; s < blocks[ai]; ++s) k.dec();
            mpz_mul_ui(f.get_mpz_t(), f.get_mpz_t(), ai);
            mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), ai + 1 - p);
        }
        return total;
    }
    if (p == 0) {
        // N = sum_b C(Z_b, m) * C(M - b, q-1)
        BigCount g = binomial(M - 1, q - 1);
        BinTracker k;
        k.set(blocks[0], m);  // Z_1
        for (std::uint64_t bi = 1; bi + q <= M + 1; ++bi) {
            if (k.x >= m) mpz_addmul(total.get_mpz_t(), k.k.get_mpz_t(), g.get_mpz_t());
            if (bi + q > M) break;  // last term; g would divide by zero at q = 1
            for (std::uint64_t s = 0; s < blocks[bi]; ++s) k.inc();
            std::uint64_t x = M - bi;  // next g = C(x-1, q-1)
            mpz_mul_ui(g.get_mpz_t(), g.get_mpz_t(), x - (q - 1));
            mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), x);
        }
        return total;
    }

    std::uint64_t bmax = M - q + 1;
    std::vector<BigCount> g(bmax + 1);
    g[bmax] = 1;  // C(q-1, q-1)
    for (std::uint64_t bi = bmax; bi-- > 1;) {
        std::uint64_t x = M - bi;  // g[bi] = C(x, q-1) from C(x-1, q-1)
        g[bi] = g[bi + 1];
        mpz_mul_ui(g[bi].get_mpz_t(), g[bi].get_mpz_t(), x);
        mpz_divexact_ui(g[bi].get_mpz_t(), g[bi].get_mpz_t(), x - (q - 1));
    }

    BigCount f = 1;  // C(a-1, p-1) at a = p
    std::uint64_t b_start = p + 1;
    BinTracker k;
    {
        std::uint64_t x = blocks[p];  // Z_{p+1} - Z_p
        while (x < m && b_start < bmax) x += blocks[b_start++];
        k.set(x, m);
    }
    BinTracker inner;
    BigCount sum_inner;
    for (std::uint64_t ai = p; ai < bmax; ++ai) {
        // invariant: k tracks C(Z_{b_start} - Z_{ai}, m)
        sum_inner = 0;
        inner = k;
        for (std::uint64_t bi = b_start; bi <= bmax; ++bi) {
            if (inner.x >= m)
                mpz_addmul(sum_inner.get_mpz_t(), inner.k.get_mpz_t(), g[bi].get_mpz_t());
            if (bi < bmax)
                for (std::uint64_t s = 0; s < blocks[bi]; ++s) inner.inc();
        }
        mpz_addmul(total.get_mpz_t(), f.get_mpz_t(), sum_inner.get_mpz_t());

        // advance a: subtract its block, keep b_start > ai and the gap >= m
        for (std::uint64_t s = 0; s < blocks[ai]; ++s) k.dec();
        if (b_start == ai + 1 && b_start < bmax) {
            for (std::uint64_t s = 0; s < blocks[b_start]; ++s) k.inc();
            ++b_start;
        }
        while (k.x < m && b_start < bmax) {
            for (std::uint64_t s = 0; s < blocks[b_start]; ++s) k.inc();
            ++b_start;
        }
        mpz_mul_ui(f.get_mpz_t(), f.get_mpz_t(), ai);
        mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), ai + 1 - p);
    }
    return total;
}

}  // namespace

BigCount count_subword_occurrences_fast(const Word& w, const Word& u) {
    if (u.empty()) return 1;
    if (u.size() > w.size()) return 0;
    if (u.size() == w.size()) return u == w ? 1 : 0;

    auto runs = runs_of(u);
    if (runs.size() == 1) return binomial(count_letter(w, runs[0].letter), runs[0].len);

    Letter x = runs[0].letter;
    Letter y = runs[1].letter;
    bool two_letters = true;
    for (const Run& r : runs)
        if (r.letter != x && r.letter != y) two_letters = false;

    if (two_letters && runs.size() <= 3) {
        LetterSet pair({x, y});
        Word pw = project(w, pair);
        // Try both readings of u as a^p b^m a^q (p or q possibly zero).
        struct Shape {
            Letter a, b;
            std::uint64_t p, m, q;
        };
        std::vector<Shape> shapes;
        if (runs.size() == 3) {
            shapes.push_back({x, y, runs[0].len, runs[1].len, runs[2].len});
        } else {
            shapes.push_back({x, y, runs[0].len, runs[1].len, 0});
            shapes.push_back({y, x, 0, runs[0].len, runs[1].len});
        }
        BigCount out;
        for (const Shape& s : shapes) {
            if (count_pinned_outer(pw, s.a, s.p, s.m, s.q, out)) return out;
        }
        if (!is_subword(pw, u)) return 0;
        for (const Shape& s : shapes) {
            if (s.m == 1) return count_single_middle(pw, s.a, s.p, s.q);
        }
        const Shape& s = shapes.front();
        return count_three_run(pw, s.a, s.p, s.m, s.q);
    }
    return count_subword_occurrences(w, u);
}

}  // namespace wordrec
