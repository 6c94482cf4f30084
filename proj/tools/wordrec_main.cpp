#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordrec/bounds.hpp"
#include "wordrec/counting.hpp"
#include "wordrec/harness.hpp"

namespace {

wordrec::QueryModel parse_model(const std::string& name) {
    if (name == "count-subword") return wordrec::QueryModel::CountSubword;
    if (name == "exists-subword") return wordrec::QueryModel::ExistsSubword;
    if (name == "exists-factor") return wordrec::QueryModel::ExistsFactor;
    throw CLI::ValidationError("model", "unknown model '" + name + "'");
}

int with_output(const std::string& path, const std::function<std::uint64_t(std::ostream&)>& fn) {
    std::uint64_t failures;
    if (path.empty()) {
        failures = fn(std::cout);
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << path << " for writing\n";
            return 2;
        }
        failures = fn(f);
    }
    if (failures != 0) std::cerr << failures << " trial(s) incorrect or over budget\n";
    return failures == 0 ? 0 : 1;
}

int cmd_selftest() {
    std::uint64_t seed = 0x5e1f7e57;
    std::uint64_t bad = 0;
    // Counting oracle cross-check: DP against the structured fast path.
    for (int trial = 0; trial < 2000; ++trial) {
        wordrec::Word w = wordrec::random_word(1 + trial % 30, 2 + trial % 3, seed + trial);
        wordrec::Word u = wordrec::random_word(trial % 6, 2 + trial % 3, seed ^ trial);
        if (wordrec::count_subword_occurrences(w, u) !=
            wordrec::count_subword_occurrences_fast(w, u))
            ++bad;
    }
    std::cout << "counting cross-check: " << (bad ? "FAIL" : "ok") << '\n';
    std::uint64_t mismatches = wordrec::run_exhaustive(10, &std::cout);
    std::cout << "exhaustive n<=10: " << (mismatches ? "FAIL" : "ok") << '\n';
    return (bad || mismatches) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word reconstruction strategies under subword/factor query oracles"};
    app.require_subcommand(1);

    // reconstruct
    std::string model_name;
    std::string word_text;
    std::vector<std::uint64_t> random_nk;
    std::uint64_t seed = 0;
    unsigned k_override = 0;
    auto* rec = app.add_subcommand("reconstruct", "run one reconstruction and report it");
    rec->add_option("--model", model_name, "count-subword | exists-subword | exists-factor")
        ->required();
    auto* wopt = rec->add_option("--word", word_text, "explicit hidden word (digits then a-z)");
    auto* ropt = rec->add_option("--random", random_nk, "uniform hidden word: N K")
                     ->expected(2);
    rec->add_option("--seed", seed, "PRNG seed for --random");
    rec->add_option("--k", k_override, "alphabet size override for --word");
    wopt->excludes(ropt);

    // sweep
    std::vector<std::string> sweep_models;
    std::vector<std::uint64_t> sweep_ns;
    std::vector<unsigned> sweep_ks;
    std::uint64_t trials = 1;
    std::string out_path;
    auto* sw = app.add_subcommand("sweep", "trial grid with per-trial CSV rows");
    sw->add_option("--models", sweep_models, "comma-separated model list")
        ->required()
        ->delimiter(',');
    sw->add_option("--n", sweep_ns, "word lengths")->delimiter(',');
    sw->add_option("--k", sweep_ks, "alphabet sizes")->required()->delimiter(',');
    sw->add_option("--trials", trials, "trials per (model,n,k) cell");
    sw->add_option("--seed", seed, "base seed");
    sw->add_option("--out", out_path, "CSV file (default stdout)");

    // avgcase
    std::vector<std::uint64_t> avg_ns;
    auto* av = app.add_subcommand("avgcase", "average-case experiment, binary alphabet");
    av->add_option("--n", avg_ns, "word lengths")->required()->delimiter(',');
    av->add_option("--trials", trials, "trials per length");
    av->add_option("--seed", seed, "base seed");
    av->add_option("--out", out_path, "CSV file (default stdout)");

    auto* st = app.add_subcommand("selftest", "exhaustive and oracle-equivalence suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) {
            wordrec::TrialConfig cfg;
            cfg.model = parse_model(model_name);
            cfg.seed = seed;
            if (wopt->count()) {
                wordrec::Word w = wordrec::parse_word(word_text);
                unsigned k = k_override;
                if (k == 0)
                    for (wordrec::Letter l : w) k = std::max(k, static_cast<unsigned>(l) + 1);
                cfg.k = std::max(k, 1u);
                cfg.explicit_word = std::move(w);
            } else if (ropt->count()) {
                cfg.n = random_nk[0];
                cfg.k = static_cast<unsigned>(random_nk[1]);
            } else {
                std::cerr << "reconstruct needs --word or --random\n";
                return 2;
            }
            auto rep = wordrec::run_trial(cfg);
            std::cout << "model=" << wordrec::query_model_name(rep.model) << " n=" << rep.n
                      << " k=" << rep.k << " seed=" << rep.seed << '\n'
                      << "word=" << wordrec::format_word(rep.reconstructed) << '\n'
                      << "correct=" << (rep.correct ? 1 : 0) << " queries=" << rep.queries
                      << " bound=" << rep.bound << " within_bound=" << (rep.within_bound ? 1 : 0)
                      << '\n';
            return (rep.correct && rep.within_bound) ? 0 : 1;
        }
        if (sw->parsed()) {
            std::vector<wordrec::QueryModel> models;
            for (const auto& m : sweep_models) models.push_back(parse_model(m));
            return with_output(out_path, [&](std::ostream& os) {
                return wordrec::bench_sweep(models, sweep_ns, sweep_ks, trials, seed, os);
            });
        }
        if (av->parsed()) {
            return with_output(out_path, [&](std::ostream& os) {
                return wordrec::avgcase_experiment(avg_ns, trials, seed, os);
            });
        }
        if (st->parsed()) return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
