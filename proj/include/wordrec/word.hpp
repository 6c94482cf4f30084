#ifndef WORDREC_WORD_HPP
#define WORDREC_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordrec {

// Letters are indices 0..k-1 into an alphabet of size k.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct Alphabet {
    unsigned size = 2;
};

// Small set of letters, alphabet size capped at 64.
class LetterSet {
public:
    LetterSet() = default;
    explicit LetterSet(std::initializer_list<Letter> ls) {
        for (Letter l : ls) add(l);
    }
    static LetterSet full(unsigned k) {
        LetterSet s;
        s.mask_ = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
        return s;
    }
    void add(Letter l) { mask_ |= std::uint64_t{1} << l; }
    bool contains(Letter l) const { return (mask_ >> l) & 1; }
    unsigned count() const;
    LetterSet intersect(LetterSet other) const {
        LetterSet s;
        s.mask_ = mask_ & other.mask_;
        return s;
    }
    std::vector<Letter> letters() const;
    bool operator==(const LetterSet&) const = default;

private:
    std::uint64_t mask_ = 0;
};

// Text encoding: digits 0-9 then lowercase a-z, one word per line, empty line = empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

Word repeated(Letter l, std::uint64_t count);
Word concat(const Word& a, const Word& b);
Word reversed(const Word& w);

void validate_word(const Word& w, Alphabet a);

std::uint64_t count_letter(const Word& w, Letter l);

// Subsequence of w retaining exactly the letters in keep, order preserved.
Word project(const Word& w, LetterSet keep);

// Greedy left-to-right match; no big integers involved.
bool is_subword(const Word& w, const Word& u);

// Contiguous occurrence test (KMP, linear time).
bool is_factor(const Word& w, const Word& u);

// Exponents (s_0, ..., s_m) of a binary word 0^{s_0} 1 0^{s_1} 1 ... 1 0^{s_m};
// m equals the number of 1s, so the empty word decomposes to (0).
using BlockDecomposition = std::vector<std::uint64_t>;

BlockDecomposition block_decomposition(const Word& w);
Word compose_from_blocks(const BlockDecomposition& blocks);

}  // namespace wordrec

#endif
