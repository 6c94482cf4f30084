#include "wordrec/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

#include "wordrec/bounds.hpp"
#include "wordrec/recon_count.hpp"
#include "wordrec/recon_exists_factor.hpp"
#include "wordrec/recon_exists_subword.hpp"

namespace wordrec {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Word random_word(std::uint64_t n, unsigned k, std::uint64_t seed) {
    Word w;
    w.reserve(n);
    std::uint64_t state = seed;
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t x = splitmix64_next(state);
        auto letter = static_cast<Letter>(
            (static_cast<unsigned __int128>(x) * k) >> 64);
        w.push_back(letter);
    }
    return w;
}

namespace {

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> fields) {
    std::uint64_t s = base;
    for (std::uint64_t f : fields) {
        std::uint64_t st = s ^ (f + 0x9e3779b97f4a7c15ULL);
        s = splitmix64_next(st);
    }
    return s;
}

}  // namespace

std::uint64_t bound_for(QueryModel model, std::uint64_t n, unsigned k) {
    switch (model) {
        case QueryModel::CountSubword:
            if (k == 1) return 1;  // one letter-count query settles the word
            return k == 2 ? theorem1_bound(n) : corollary6_bound(n, k);
        case QueryModel::ExistsSubword:
            return k == 1 ? lemma8_bound_unknown_n(n) : theorem7_bound(n, k);
        case QueryModel::ExistsFactor:
            return k == 1 ? 0 : theorem16_bound(n, k);
    }
    return 0;
}

TrialReport run_trial(const TrialConfig& config) {
    Word hidden =
        config.explicit_word ? *config.explicit_word : random_word(config.n, config.k, config.seed);
    TrialReport rep;
    rep.model = config.model;
    rep.n = hidden.size();
    rep.k = config.k;
    rep.seed = config.seed;

    OracleSession session(hidden, Alphabet{config.k}, config.model);
    session.retain_transcript(false);
    switch (config.model) {
        case QueryModel::CountSubword:
            rep.reconstructed =
                config.k == 2 ? reconstruct_binary_count(session) : reconstruct_kary_count(session);
            break;
        case QueryModel::ExistsSubword:
            rep.reconstructed = reconstruct_exists_subword(session);
            break;
        case QueryModel::ExistsFactor:
            rep.reconstructed = reconstruct_exists_factor(session, hidden.size());
            break;
    }
    rep.queries = session.queries_asked();
    rep.bound = bound_for(config.model, rep.n, config.k);
    rep.correct = (rep.reconstructed == hidden);
    rep.within_bound = (rep.queries <= rep.bound);
    return rep;
}

std::uint64_t bench_sweep(const std::vector<QueryModel>& models,
                          const std::vector<std::uint64_t>& ns, const std::vector<unsigned>& ks,
                          std::uint64_t trials, std::uint64_t seed, std::ostream& out) {
    out << "model,n,k,seed,correct,queries,bound,within_bound\n";
    std::uint64_t failures = 0;
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        for (std::uint64_t n : ns) {
            for (unsigned k : ks) {
                std::vector<TrialReport> cell(trials);
#pragma omp parallel for schedule(dynamic)
                for (std::uint64_t t = 0; t < trials; ++t) {
                    TrialConfig cfg;
                    cfg.model = models[mi];
                    cfg.n = n;
                    cfg.k = k;
                    cfg.seed = derive_seed(seed, {mi, n, k, t});
                    cell[t] = run_trial(cfg);
                }
                std::uint64_t max_q = 0, sum_q = 0, violations = 0;
                for (const auto& rep : cell) {
                    out << query_model_name(rep.model) << ',' << rep.n << ',' << rep.k << ','
                        << rep.seed << ',' << (rep.correct ? 1 : 0) << ',' << rep.queries << ','
                        << rep.bound << ',' << (rep.within_bound ? 1 : 0) << '\n';
                    max_q = std::max(max_q, rep.queries);
                    sum_q += rep.queries;
                    if (!rep.correct || !rep.within_bound) ++violations;
                }
                if (trials > 0) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.3f",
                                  static_cast<double>(sum_q) / static_cast<double>(trials));
                    out << "# " << query_model_name(models[mi]) << " n=" << n << " k=" << k
                        << " mean_q=" << buf << " max_q=" << max_q
                        << " violations=" << violations << '\n';
                }
                failures += violations;
            }
        }
    }
    return failures;
}

std::uint64_t avgcase_experiment(const std::vector<std::uint64_t>& ns, std::uint64_t trials,
                                 std::uint64_t seed, std::ostream& out) {
    out << "n,trials,mean_q,max_q,fallback_rate\n";
    std::uint64_t failures = 0;
    if (trials == 0) return 0;
    for (std::uint64_t n : ns) {
        std::vector<std::uint64_t> queries(trials);
        std::vector<char> fallback(trials), wrong(trials);
#pragma omp parallel for schedule(dynamic)
        for (std::uint64_t t = 0; t < trials; ++t) {
            Word hidden = random_word(n, 2, derive_seed(seed, {n, t}));
            OracleSession session(hidden, Alphabet{2}, QueryModel::CountSubword);
            session.retain_transcript(false);
            auto outcome = reconstruct_binary_avgcase(session, n);
            queries[t] = session.queries_asked();
            fallback[t] = outcome.fallback_taken ? 1 : 0;
            wrong[t] = (outcome.word == hidden) ? 0 : 1;
        }
        std::uint64_t sum_q = 0, max_q = 0, nfall = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            sum_q += queries[t];
            max_q = std::max(max_q, queries[t]);
            nfall += fallback[t];
            failures += wrong[t];
        }
        char mean_buf[64], rate_buf[64];
        std::snprintf(mean_buf, sizeof mean_buf, "%.3f",
                      static_cast<double>(sum_q) / static_cast<double>(trials));
        std::snprintf(rate_buf, sizeof rate_buf, "%.6f",
                      static_cast<double>(nfall) / static_cast<double>(trials));
        out << n << ',' << trials << ',' << mean_buf << ',' << max_q << ',' << rate_buf << '\n';
    }
    return failures;
}

std::uint64_t run_exhaustive(std::uint64_t n_max, std::ostream* progress) {
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        std::uint64_t total = std::uint64_t{1} << n;
        std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad)
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            Word hidden(n);
            for (std::uint64_t i = 0; i < n; ++i) hidden[i] = (bits >> i) & 1;
            {
                OracleSession s(hidden, Alphabet{2}, QueryModel::CountSubword);
                if (reconstruct_binary_count(s) != hidden) ++bad;
            }
            {
                OracleSession s(hidden, Alphabet{2}, QueryModel::ExistsSubword);
                if (reconstruct_exists_subword(s) != hidden) ++bad;
            }
            {
                OracleSession s(hidden, Alphabet{2}, QueryModel::ExistsFactor);
                if (reconstruct_exists_factor(s, n) != hidden) ++bad;
            }
        }
        mismatches += bad;
        if (progress) *progress << "n=" << n << " words=" << total << " mismatches=" << bad << '\n';
    }
    return mismatches;
}

}  // namespace wordrec
