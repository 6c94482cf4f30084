#include "wordrec/oracle.hpp"

#include <ostream>
#include <string>

#include "wordrec/counting.hpp"

namespace wordrec {

const char* query_model_name(QueryModel m) {
    switch (m) {
        case QueryModel::CountSubword: return "count-subword";
        case QueryModel::ExistsSubword: return "exists-subword";
        case QueryModel::ExistsFactor: return "exists-factor";
    }
    return "?";
}

ModelViolation::ModelViolation(QueryModel session_model, QueryModel asked)
    : std::logic_error(std::string("oracle session is in model ") + query_model_name(session_model) +
                       " but was asked a " + query_model_name(asked) + " query") {}

OracleSession::OracleSession(Word hidden, Alphabet alphabet, QueryModel model)
    : hidden_(std::move(hidden)), alphabet_(alphabet), model_(model) {
    validate_word(hidden_, alphabet_);
}

void OracleSession::gate(QueryModel asked) const {
    if (asked != model_) throw ModelViolation(model_, asked);
}

void OracleSession::record(const Word& u, std::variant<BigCount, bool> answer) {
    ++queries_asked_;
    if (log_) {
        *log_ << query_model_name(model_) << '\t' << format_word(u) << '\t';
        if (std::holds_alternative<bool>(answer))
            *log_ << (std::get<bool>(answer) ? "true" : "false");
        else
            *log_ << std::get<BigCount>(answer).get_str();
        *log_ << '\n';
    }
    if (retain_) transcript_.push_back({u, std::move(answer)});
}

BigCount OracleSession::ask_count_subword(const Word& u) {
    gate(QueryModel::CountSubword);
    validate_word(u, alphabet_);
    BigCount answer = count_subword_occurrences_fast(hidden_, u);
    record(u, answer);
    return answer;
}

bool OracleSession::ask_exists_subword(const Word& u) {
    gate(QueryModel::ExistsSubword);
    validate_word(u, alphabet_);
    bool answer = is_subword(hidden_, u);
    record(u, answer);
    return answer;
}

bool OracleSession::ask_exists_factor(const Word& u) {
    gate(QueryModel::ExistsFactor);
    validate_word(u, alphabet_);
    bool answer = is_factor(hidden_, u);
    record(u, answer);
    return answer;
}

}  // namespace wordrec
