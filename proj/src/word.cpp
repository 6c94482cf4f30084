#include "wordrec/word.hpp"

#include <bit>

namespace wordrec {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int letter_of_char(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    return -1;
}

}  // namespace

unsigned LetterSet::count() const {
    return static_cast<unsigned>(std::popcount(mask_));
}

std::vector<Letter> LetterSet::letters() const {
    std::vector<Letter> out;
    for (unsigned l = 0; l < 64; ++l)
        if (contains(static_cast<Letter>(l))) out.push_back(static_cast<Letter>(l));
    return out;
}

Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        int l = letter_of_char(c);
        if (l < 0) throw std::invalid_argument("parse_word: bad character '" + std::string(1, c) + "'");
        w.push_back(static_cast<Letter>(l));
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (l >= kDigits.size()) throw std::invalid_argument("format_word: letter index out of text range");
        out.push_back(kDigits[l]);
    }
    return out;
}

Word repeated(Letter l, std::uint64_t count) {
    return Word(count, l);
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word reversed(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

void validate_word(const Word& w, Alphabet a) {
    for (Letter l : w)
        if (l >= a.size) throw std::invalid_argument("word letter out of alphabet range");
}

std::uint64_t count_letter(const Word& w, Letter l) {
    std::uint64_t c = 0;
    for (Letter x : w) c += (x == l);
    return c;
}

Word project(const Word& w, LetterSet keep) {
    Word out;
    for (Letter l : w)
        if (keep.contains(l)) out.push_back(l);
    return out;
}

bool is_subword(const Word& w, const Word& u) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < w.size() && j < u.size(); ++i)
        if (w[i] == u[j]) ++j;
    return j == u.size();
}

bool is_factor(const Word& w, const Word& u) {
    if (u.empty()) return true;
    if (u.size() > w.size()) return false;
    // KMP failure function over u.
    std::vector<std::size_t> fail(u.size(), 0);
    for (std::size_t i = 1, k = 0; i < u.size(); ++i) {
        while (k > 0 && u[i] != u[k]) k = fail[k - 1];
        if (u[i] == u[k]) ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < w.size(); ++i) {
        while (k > 0 && w[i] != u[k]) k = fail[k - 1];
        if (w[i] == u[k]) ++k;
        if (k == u.size()) return true;
    }
    return false;
}

BlockDecomposition block_decomposition(const Word& w) {
    BlockDecomposition blocks{0};
    for (Letter l : w) {
        if (l == 0) {
            ++blocks.back();
        } else if (l == 1) {
            blocks.push_back(0);
        } else {
            throw std::invalid_argument("block_decomposition: word is not binary");
        }
    }
    return blocks;
}

Word compose_from_blocks(const BlockDecomposition& blocks) {
    if (blocks.empty()) throw std::invalid_argument("compose_from_blocks: need at least one exponent");
    Word w;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        w.insert(w.end(), blocks[i], Letter{0});
        if (i + 1 < blocks.size()) w.push_back(Letter{1});
    }
    return w;
}

}  // namespace wordrec
