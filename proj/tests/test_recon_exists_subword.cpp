#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wordrec/bounds.hpp"
#include "wordrec/harness.hpp"
#include "wordrec/recon_exists_subword.hpp"

using namespace wordrec;

namespace {

Word word_from_bits(std::uint64_t bits, std::uint64_t n) {
    Word w(n);
    for (std::uint64_t i = 0; i < n; ++i) w[i] = (bits >> i) & 1;
    return w;
}

}  // namespace

TEST_CASE("count_letter_occurrences pinned examples") {
    {
        // absent letter, unknown n: the very first power query settles it
        OracleSession s(parse_word("2222"), Alphabet{3}, QueryModel::ExistsSubword);
        auto r = count_letter_occurrences(s, 0);
        CHECK(r.count == 0);
        CHECK(r.queries_used == 1);
    }
    {
        OracleSession s(parse_word("0101"), Alphabet{2}, QueryModel::ExistsSubword);
        auto r = count_letter_occurrences(s, 0, 4);
        CHECK(r.count == 2);
        CHECK(r.queries_used <= 3);  // ceil(log2 5)
    }
    {
        OracleSession s(parse_word("aaaa"), Alphabet{11}, QueryModel::ExistsSubword);
        auto r = count_letter_occurrences(s, 10);
        CHECK(r.count == 4);
        CHECK(r.queries_used <= 6);  // doubling reaches M = 8
    }
}

TEST_CASE("count_letter_occurrences exact and in budget, exhaustive binary") {
    for (std::uint64_t n = 0; n <= 16; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Word w = word_from_bits(bits, n);
            for (Letter a : {Letter{0}, Letter{1}}) {
                std::uint64_t truth = count_letter(w, a);
                {
                    OracleSession s(w, Alphabet{2}, QueryModel::ExistsSubword);
                    auto r = count_letter_occurrences(s, a);
                    REQUIRE(r.count == truth);
                    REQUIRE(r.queries_used <= lemma8_bound_unknown_n(truth));
                }
                {
                    OracleSession s(w, Alphabet{2}, QueryModel::ExistsSubword);
                    auto r = count_letter_occurrences(s, a, n);
                    REQUIRE(r.count == truth);
                    REQUIRE(r.queries_used <= lemma8_bound_known_n(n));
                }
            }
        }
    }
}

TEST_CASE("count_letter_occurrences randomized k-ary") {
    for (int trial = 0; trial < 300; ++trial) {
        unsigned k = 2 + trial % 7;
        Word w = random_word(trial % 60, k, 60601 + trial);
        auto a = static_cast<Letter>(trial % k);
        OracleSession s(w, Alphabet{k}, QueryModel::ExistsSubword);
        auto r = count_letter_occurrences(s, a);
        REQUIRE(r.count == count_letter(w, a));
        REQUIRE(r.queries_used <= lemma8_bound_unknown_n(r.count));
    }
}

TEST_CASE("merge_two_projections pinned examples") {
    {
        OracleSession s(parse_word("0101"), Alphabet{2}, QueryModel::ExistsSubword);
        CHECK(merge_two_projections(s, parse_word("00"), parse_word("11")) == parse_word("0101"));
        CHECK(s.queries_asked() == 3);
    }
    {
        OracleSession s(parse_word("11"), Alphabet{2}, QueryModel::ExistsSubword);
        CHECK(merge_two_projections(s, Word{}, parse_word("11")) == parse_word("11"));
        CHECK(s.queries_asked() == 0);
    }
    {
        OracleSession s(parse_word("10"), Alphabet{2}, QueryModel::ExistsSubword);
        CHECK(merge_two_projections(s, parse_word("0"), parse_word("1")) == parse_word("10"));
        CHECK(s.queries_asked() == 1);
    }
}

TEST_CASE("merge_two_projections exhaustive binary splits up to length 12") {
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Word w = word_from_bits(bits, n);
            Word u = project(w, LetterSet{0}), v = project(w, LetterSet{1});
            OracleSession s(w, Alphabet{2}, QueryModel::ExistsSubword);
            REQUIRE(merge_two_projections(s, u, v) == w);
            REQUIRE(s.queries_asked() <= (n == 0 ? 0 : n - 1));
        }
    }
}

TEST_CASE("merge_projection_with_letter pinned examples") {
    {
        OracleSession s(parse_word("0101"), Alphabet{2}, QueryModel::ExistsSubword);
        CHECK(merge_projection_with_letter(s, parse_word("11"), 0) == parse_word("0101"));
        CHECK(s.queries_asked() == 5);
    }
    {
        OracleSession s(parse_word("aaa"), Alphabet{11}, QueryModel::ExistsSubword);
        CHECK(merge_projection_with_letter(s, Word{}, 10) == parse_word("aaa"));
        CHECK(s.queries_asked() == 4);
    }
    {
        OracleSession s(parse_word("b"), Alphabet{12}, QueryModel::ExistsSubword);
        CHECK(merge_projection_with_letter(s, parse_word("b"), 10) == parse_word("b"));
        CHECK(s.queries_asked() == 2);
    }
}

TEST_CASE("merge_projection_with_letter always spends exactly n+1 queries") {
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Word w = word_from_bits(bits, n);
            OracleSession s(w, Alphabet{2}, QueryModel::ExistsSubword);
            REQUIRE(merge_projection_with_letter(s, project(w, LetterSet{1}), 0) == w);
            REQUIRE(s.queries_asked() == n + 1);
        }
    }
}

TEST_CASE("reconstruct_projection pinned examples") {
    {
        // "banana" as letters: b=11, a=10, n=23
        Word w = parse_word("banana");
        OracleSession s(w, Alphabet{24}, QueryModel::ExistsSubword);
        CHECK(reconstruct_projection(s, LetterSet{10, 11}) == parse_word("baaa"));
    }
    {
        OracleSession s(parse_word("0101"), Alphabet{4}, QueryModel::ExistsSubword);
        CHECK(reconstruct_projection(s, LetterSet{2, 3}) == Word{});
    }
    {
        Word w = parse_word("0120201");
        OracleSession s(w, Alphabet{3}, QueryModel::ExistsSubword);
        CHECK(reconstruct_projection(s, LetterSet::full(3)) == w);
        std::uint64_t budget = w.size() * ceil_log2(3) + 3 * (2 + floor_log2(w.size() + 1));
        CHECK(s.queries_asked() <= budget);
    }
}

TEST_CASE("reconstruct_exists_subword pinned examples") {
    {
        OracleSession s(parse_word("0101"), Alphabet{2}, QueryModel::ExistsSubword);
        CHECK(reconstruct_exists_subword(s) == parse_word("0101"));
        CHECK(s.queries_asked() <= 12);  // 4*1 + 2*(2+floor(log2 5))
    }
    {
        OracleSession s(Word{}, Alphabet{2}, QueryModel::ExistsSubword);
        CHECK(reconstruct_exists_subword(s) == Word{});
        CHECK(s.queries_asked() <= theorem7_bound(0, 2));
    }
    {
        Word w = parse_word("102020");  // "banana" over the 3-letter alphabet {a,b,n}
        OracleSession s(w, Alphabet{3}, QueryModel::ExistsSubword);
        CHECK(reconstruct_exists_subword(s) == w);
        CHECK(s.queries_asked() <= 24);  // 6*2 + 3*(2+floor(log2 7))
    }
}

TEST_CASE("reconstruct_exists_subword exhaustive binary to length 12") {
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Word w = word_from_bits(bits, n);
            OracleSession s(w, Alphabet{2}, QueryModel::ExistsSubword);
            REQUIRE(reconstruct_exists_subword(s) == w);
            REQUIRE(s.queries_asked() <= theorem7_bound(n, 2));
        }
    }
}

TEST_CASE("reconstruct_exists_subword random words, several alphabet sizes") {
    for (unsigned k : {2u, 4u, 8u, 26u}) {
        for (std::uint64_t n : {1, 10, 100, 500}) {
            Word w = random_word(n, k, 5 * n + k);
            OracleSession s(w, Alphabet{k}, QueryModel::ExistsSubword);
            REQUIRE(reconstruct_exists_subword(s) == w);
            REQUIRE(s.queries_asked() <= theorem7_bound(n, k));
        }
    }
}

TEST_CASE("single-letter alphabet reduces to a letter count") {
    OracleSession s(repeated(0, 13), Alphabet{1}, QueryModel::ExistsSubword);
    CHECK(reconstruct_exists_subword(s) == repeated(0, 13));
    CHECK(s.queries_asked() <= lemma8_bound_unknown_n(13));
}
