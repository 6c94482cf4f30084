#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wordrec/counting.hpp"
#include "wordrec/harness.hpp"
#include "wordrec/word.hpp"

using namespace wordrec;

namespace {

// Brute-force reference: enumerate all increasing embeddings of u into w.
BigCount brute_count(const Word& w, const Word& u, std::size_t i = 0, std::size_t j = 0) {
    if (j == u.size()) return 1;
    if (u.size() - j > w.size() - i) return 0;
    BigCount total = 0;
    for (std::size_t p = i; p < w.size(); ++p)
        if (w[p] == u[j]) total += brute_count(w, u, p + 1, j + 1);
    return total;
}

Word word_from_bits(std::uint64_t bits, std::uint64_t n) {
    Word w(n);
    for (std::uint64_t i = 0; i < n; ++i) w[i] = (bits >> i) & 1;
    return w;
}

Word word_from_digits(std::uint64_t value, std::uint64_t n, unsigned k) {
    Word w(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        w[i] = static_cast<Letter>(value % k);
        value /= k;
    }
    return w;
}

}  // namespace

TEST_CASE("word text encoding round-trips") {
    CHECK(format_word(parse_word("0010")) == "0010");
    CHECK(parse_word("") == Word{});
    CHECK(parse_word("a") == Word{10});
    CHECK(parse_word("z") == Word{35});
    CHECK(format_word(Word{0, 1, 10, 35}) == "01az");
    CHECK_THROWS_AS(parse_word("A"), std::invalid_argument);
}

TEST_CASE("count_subword_occurrences on pinned examples") {
    CHECK(count_subword_occurrences(parse_word("0010"), parse_word("01")) == 2);
    CHECK(count_subword_occurrences(parse_word("0010"), Word{}) == 1);
    CHECK(count_subword_occurrences(Word{}, Word{}) == 1);
    // single-letter case coincides with the integer binomial coefficient
    CHECK(count_subword_occurrences(parse_word("aaaa"), parse_word("aa")) == 6);
}

TEST_CASE("counting matches brute force exhaustively, k = 2 and 3") {
    for (unsigned k = 2; k <= 3; ++k) {
        std::uint64_t wlen_max = (k == 2) ? 8 : 6;
        for (std::uint64_t n = 0; n <= wlen_max; ++n) {
            std::uint64_t wn = 1;
            for (std::uint64_t i = 0; i < n; ++i) wn *= k;
            for (std::uint64_t wv = 0; wv < wn; ++wv) {
                Word w = word_from_digits(wv, n, k);
                for (std::uint64_t ul = 0; ul <= 4 && ul <= n; ++ul) {
                    std::uint64_t un = 1;
                    for (std::uint64_t i = 0; i < ul; ++i) un *= k;
                    for (std::uint64_t uv = 0; uv < un; ++uv) {
                        Word u = word_from_digits(uv, ul, k);
                        BigCount expect = brute_count(w, u);
                        REQUIRE(count_subword_occurrences(w, u) == expect);
                        REQUIRE(count_subword_occurrences_fast(w, u) == expect);
                        REQUIRE(is_subword(w, u) == (expect >= 1));
                        if (is_factor(w, u)) REQUIRE(is_subword(w, u));
                    }
                }
            }
        }
    }
}

TEST_CASE("single-letter words reduce to integer binomials up to n = 30") {
    for (std::uint64_t n = 0; n <= 30; ++n) {
        Word w = repeated(0, n);
        for (std::uint64_t l = 0; l <= n; ++l)
            CHECK(count_subword_occurrences(w, repeated(0, l)) == binomial(n, l));
    }
}

TEST_CASE("is_subword and is_factor examples") {
    CHECK(is_subword(parse_word("0101"), parse_word("011")));
    CHECK(is_subword(parse_word("0101"), parse_word("0101")));
    CHECK_FALSE(is_subword(parse_word("0101"), parse_word("00110")));
    CHECK(is_factor(parse_word("aa"), parse_word("a")));
    CHECK_FALSE(is_factor(parse_word("aa"), parse_word("aaa")));
    CHECK(is_factor(parse_word("00011100111011"), parse_word("11100111011")));
    CHECK(is_factor(parse_word("0101"), Word{}));
}

TEST_CASE("projection examples and algebra") {
    CHECK(project(parse_word("0120201"), LetterSet{0, 1}) == parse_word("01001"));
    CHECK(project(parse_word("0120201"), LetterSet::full(3)) == parse_word("0120201"));
    CHECK(project(parse_word("0120201"), LetterSet{2}) == parse_word("22"));

    // project(project(w,B),C) = project(w, B intersect C), and counting a
    // word over B against w equals counting it against the projection.
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(1 + t % 17, 4, 1000 + t);
        LetterSet b{0, 1}, c{1, 2};
        CHECK(project(project(w, b), c) == project(w, b.intersect(c)));
        Word u = random_word(t % 4, 2, 2000 + t);  // letters 0,1 only
        CHECK(count_subword_occurrences(w, u) == count_subword_occurrences(project(w, b), u));
    }
}

TEST_CASE("block decomposition examples and round trip") {
    CHECK(block_decomposition(parse_word("0010")) == BlockDecomposition{2, 1});
    CHECK(block_decomposition(parse_word("111")) == BlockDecomposition{0, 0, 0, 0});
    CHECK(block_decomposition(Word{}) == BlockDecomposition{0});
    CHECK_THROWS_AS(block_decomposition(parse_word("012")), std::invalid_argument);

    for (std::uint64_t n = 0; n <= 10; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Word w = word_from_bits(bits, n);
            auto d = block_decomposition(w);
            CHECK(d.size() == count_letter(w, 1) + 1);
            CHECK(compose_from_blocks(d) == w);
        }
    }
}

TEST_CASE("fast counting agrees with the dynamic program on strategy-shaped queries") {
    for (int t = 0; t < 500; ++t) {
        Word w = random_word(1 + t % 40, 2, 31337 + t);
        std::uint64_t ones = count_letter(w, 1);
        // shapes the strategies emit: 1^a 0^b 1^c
        std::uint64_t a = t % 5, b = 1 + t % 3, c = t % 7;
        Word u = concat(concat(repeated(1, a), repeated(0, b)), repeated(1, c));
        CHECK(count_subword_occurrences_fast(w, u) == count_subword_occurrences(w, u));
        if (ones > 0) {
            Word v = concat(repeated(1, t % static_cast<int>(ones + 1)), repeated(0, 1));
            CHECK(count_subword_occurrences_fast(w, v) == count_subword_occurrences(w, v));
        }
    }
}
