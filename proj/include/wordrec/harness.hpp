#ifndef WORDREC_HARNESS_HPP
#define WORDREC_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wordrec/oracle.hpp"

namespace wordrec {

// splitmix64 step: advances the state and returns the next 64-bit output.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Uniform word over {0..k-1}^n, deterministic in (n, k, seed). Letters come
// from one splitmix64 output each, reduced by the multiply-shift trick
// (128-bit product, high word); bias below 2^-32 for k <= 36.
Word random_word(std::uint64_t n, unsigned k, std::uint64_t seed);

struct TrialConfig {
    QueryModel model = QueryModel::CountSubword;
    std::uint64_t n = 0;
    unsigned k = 2;
    std::uint64_t seed = 0;
    std::optional<Word> explicit_word;  // overrides the random source
};

struct TrialReport {
    QueryModel model = QueryModel::CountSubword;
    std::uint64_t n = 0;
    unsigned k = 2;
    std::uint64_t seed = 0;
    Word reconstructed;
    bool correct = false;
    std::uint64_t queries = 0;
    std::uint64_t bound = 0;
    bool within_bound = false;
};

// Certified query budget for one reconstruction run of the given model.
std::uint64_t bound_for(QueryModel model, std::uint64_t n, unsigned k);

// One hidden word, one session, one strategy run, certified against bound_for.
TrialReport run_trial(const TrialConfig& config);

// One CSV row per trial (model,n,k,seed,correct,queries,bound,within_bound)
// plus a '#'-prefixed aggregate line per (model,n,k) cell. Returns the number
// of trials that were incorrect or over budget.
std::uint64_t bench_sweep(const std::vector<QueryModel>& models,
                          const std::vector<std::uint64_t>& ns, const std::vector<unsigned>& ks,
                          std::uint64_t trials, std::uint64_t seed, std::ostream& out);

// Average-case experiment over uniform binary words; CSV columns
// n,trials,mean_q,max_q,fallback_rate. Returns the number of incorrect runs.
std::uint64_t avgcase_experiment(const std::vector<std::uint64_t>& ns, std::uint64_t trials,
                                 std::uint64_t seed, std::ostream& out);

// All binary words of each length up to n_max through all three strategies;
// returns the number of mismatches.
std::uint64_t run_exhaustive(std::uint64_t n_max, std::ostream* progress = nullptr);

}  // namespace wordrec

#endif
