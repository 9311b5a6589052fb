#include "pathsig/words.hpp"

#include <iterator>
#include <stdexcept>

namespace pathsig {

namespace {

void check_alphabet(std::size_t d) {
  if (d < 1) throw std::invalid_argument("alphabet size must be at least 1");
  if (d > 65535) throw std::invalid_argument("alphabet size above 65535 is unsupported");
}

}  // namespace

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  bool wide = false;
  for (auto a : w)
    if (a > 9) wide = true;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && wide) s += '.';
    s += std::to_string(static_cast<unsigned>(w[i]));
  }
  return s;
}

std::size_t word_index(const Word& w, std::size_t d) {
  check_alphabet(d);
  std::size_t idx = 0;
  for (auto a : w) {
    if (a < 1 || a > d) throw std::invalid_argument("word letter out of range");
    idx = idx * d + (a - 1);
  }
  return idx;
}

Word word_at_index(std::size_t index, std::size_t len, std::size_t d) {
  check_alphabet(d);
  Word w(len);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = static_cast<std::uint16_t>(index % d + 1);
    index /= d;
  }
  if (index != 0) throw std::invalid_argument("word index out of range");
  return w;
}

std::vector<Word> enumerate_words(std::size_t d, std::size_t max_len,
                                  std::size_t cap) {
  check_alphabet(d);
  std::size_t count = 1, pow = 1;
  for (std::size_t k = 1; k <= max_len; ++k) {
    if (pow > cap / d)
      throw std::length_error("enumerate_words: word count exceeds the entry cap");
    pow *= d;
    count += pow;
    if (count > cap)
      throw std::length_error("enumerate_words: word count exceeds the entry cap");
  }
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t k = 0; k <= max_len; ++k) {
    std::size_t nk = 1;
    for (std::size_t i = 0; i < k; ++i) nk *= d;
    for (std::size_t idx = 0; idx < nk; ++idx)
      out.push_back(word_at_index(idx, k, d));
  }
  return out;
}

WordPoly shuffle(const Word& u, const Word& v) {
  const std::size_t nu = u.size(), nv = v.size();
  // memo over suffix pairs: cell (i, j) holds u[i:] shuffled with v[j:]
  std::vector<WordPoly> memo((nu + 1) * (nv + 1));
  auto at = [&](std::size_t i, std::size_t j) -> WordPoly& {
    return memo[i * (nv + 1) + j];
  };
  at(nu, nv)[Word{}] = 1;
  for (std::size_t i = nu; i-- > 0;) at(i, nv)[Word(u.begin() + i, u.end())] = 1;
  for (std::size_t j = nv; j-- > 0;) at(nu, j)[Word(v.begin() + j, v.end())] = 1;
  for (std::size_t i = nu; i-- > 0;) {
    for (std::size_t j = nv; j-- > 0;) {
      WordPoly& dst = at(i, j);
      for (const auto& [w, c] : at(i + 1, j)) {
        Word key;
        key.reserve(w.size() + 1);
        key.push_back(u[i]);
        key.insert(key.end(), w.begin(), w.end());
        dst[key] += c;
      }
      for (const auto& [w, c] : at(i, j + 1)) {
        Word key;
        key.reserve(w.size() + 1);
        key.push_back(v[j]);
        key.insert(key.end(), w.begin(), w.end());
        dst[key] += c;
      }
    }
  }
  return at(0, 0);
}

WordPoly shuffle(const WordPoly& p, const WordPoly& q) {
  WordPoly out;
  for (const auto& [u, cu] : p)
    for (const auto& [v, cv] : q)
      for (const auto& [w, c] : shuffle(u, v)) out[w] += cu * cv * c;
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(w.size() + 1);
  for (std::size_t i = 0; i <= w.size(); ++i)
    out.emplace_back(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()));
  return out;
}

std::pair<int, Word> antipode(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return {w.size() % 2 ? -1 : 1, r};
}

}  // namespace pathsig
