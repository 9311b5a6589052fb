#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pathsig {

// Default bound on the total number of stored coefficients of a tensor
// (and on word-enumeration sizes). Construction past the cap fails fast.
inline constexpr std::size_t kDefaultEntryCap = 10'000'000;

// Word over the alphabet {1,...,d}; letters are 1-based, the empty word is
// legal. Alphabet sizes above 65535 are rejected where words are built.
using Word = std::vector<std::uint16_t>;

// Canonical word order: length ascending, then lexicographic with
// 1 < 2 < ... < d. Tensor levels and file formats all follow it.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Integer linear combination of words; zero coefficients are never stored.
using WordPoly = std::map<Word, std::int64_t, WordOrder>;

std::string word_to_string(const Word& w);

// Position of a1...ak among length-k words: sum_i (a_i - 1) d^(k-i).
std::size_t word_index(const Word& w, std::size_t d);
// Inverse of word_index for words of length len.
Word word_at_index(std::size_t index, std::size_t len, std::size_t d);

// All words of length <= max_len in canonical order. Throws
// std::length_error once the word count exceeds cap.
std::vector<Word> enumerate_words(std::size_t d, std::size_t max_len,
                                  std::size_t cap = kDefaultEntryCap);

// Shuffle product. Every term has length |u|+|v|, coefficients are positive
// integers summing to binomial(|u|+|v|, |u|).
WordPoly shuffle(const Word& u, const Word& v);
// Bilinear extension.
WordPoly shuffle(const WordPoly& p, const WordPoly& q);

// Deconcatenation: the |w|+1 (prefix, suffix) splits of w, in split order.
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

// Antipode: ((-1)^|w|, reverse of w).
std::pair<int, Word> antipode(const Word& w);

}  // namespace pathsig
