#ifndef WORDREC_ORACLE_HPP
#define WORDREC_ORACLE_HPP

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "wordrec/bigcount.hpp"
#include "wordrec/word.hpp"

namespace wordrec {

enum class QueryModel { CountSubword, ExistsSubword, ExistsFactor };

const char* query_model_name(QueryModel m);

// Raised when a strategy asks a query of the wrong kind for its session.
// Query-bound accounting is the whole point, so this is a hard error rather
// than a silent downgrade.
class ModelViolation : public std::logic_error {
public:
    explicit ModelViolation(QueryModel session_model, QueryModel asked);
};

struct TranscriptEntry {
    Word query;
    std::variant<BigCount, bool> answer;
};

// Hidden word behind one query model. Counts every ask_* call and records a
// transcript. One session per logical thread, distinct sessions are
// independent.
class OracleSession {
public:
    OracleSession(Word hidden, Alphabet alphabet, QueryModel model);

    BigCount ask_count_subword(const Word& u);
    bool ask_exists_subword(const Word& u);
    bool ask_exists_factor(const Word& u);

    QueryModel model() const { return model_; }
    Alphabet alphabet() const { return alphabet_; }
    std::uint64_t queries_asked() const { return queries_asked_; }
    const std::vector<TranscriptEntry>& transcript() const { return transcript_; }

    // One line per query, tab-separated: model, query word, answer.
    void stream_transcript_to(std::ostream* log) { log_ = log; }
    // Heavy batch experiments can drop transcript retention; the counter
    // still tracks every query.
    void retain_transcript(bool keep) { retain_ = keep; }

private:
    void gate(QueryModel asked) const;
    void record(const Word& u, std::variant<BigCount, bool> answer);

    Word hidden_;
    Alphabet alphabet_;
    QueryModel model_;
    std::uint64_t queries_asked_ = 0;
    bool retain_ = true;
    std::vector<TranscriptEntry> transcript_;
    std::ostream* log_ = nullptr;
};

}  // namespace wordrec

#endif
