#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "pathsig/words.hpp"

using namespace pathsig;

namespace {

std::int64_t coeff_mass(const WordPoly& p) {
  std::int64_t s = 0;
  for (const auto& [w, c] : p) s += c;
  return s;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("word index matches the lexicographic formula") {
  CHECK(word_index(Word{}, 2) == 0);
  CHECK(word_index(Word{1}, 2) == 0);
  CHECK(word_index(Word{2}, 2) == 1);
  // a1...ak sits at sum_i (a_i - 1) d^(k-i)
  CHECK(word_index(Word{1, 2}, 2) == 1);
  CHECK(word_index(Word{2, 1}, 2) == 2);
  CHECK(word_index(Word{3, 1, 2}, 3) == 2 * 9 + 0 * 3 + 1);
  CHECK_THROWS_AS(word_index(Word{3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(word_index(Word{0}, 2), std::invalid_argument);
}

TEST_CASE("word_at_index inverts word_index") {
  for (std::size_t d : {1u, 2u, 3u}) {
    for (std::size_t len = 0; len <= 3; ++len) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < len; ++i) count *= d;
      for (std::size_t idx = 0; idx < count; ++idx) {
        const Word w = word_at_index(idx, len, d);
        CHECK(w.size() == len);
        CHECK(word_index(w, d) == idx);
      }
    }
  }
  CHECK_THROWS_AS(word_at_index(4, 2, 2), std::invalid_argument);
}

TEST_CASE("enumerate_words lists length-then-lex order") {
  const auto w21 = enumerate_words(2, 1);
  REQUIRE(w21.size() == 3);
  CHECK(w21[0] == Word{});
  CHECK(w21[1] == Word{1});
  CHECK(w21[2] == Word{2});

  const auto w22 = enumerate_words(2, 2);
  REQUIRE(w22.size() == 7);
  CHECK(w22[3] == Word{1, 1});
  CHECK(w22[4] == Word{1, 2});
  CHECK(w22[5] == Word{2, 1});
  CHECK(w22[6] == Word{2, 2});

  const auto w13 = enumerate_words(1, 3);
  REQUIRE(w13.size() == 4);
  CHECK(w13[3] == Word{1, 1, 1});

  CHECK_THROWS_AS(enumerate_words(10, 8, 1000), std::length_error);
}

TEST_CASE("word_to_string separates letters above 9") {
  CHECK(word_to_string(Word{}) == "e");
  CHECK(word_to_string(Word{1, 2}) == "12");
  CHECK(word_to_string(Word{10, 2}) == "10.2");
}

TEST_CASE("shuffle base cases") {
  const WordPoly empty_left = shuffle(Word{}, Word{1, 2});
  REQUIRE(empty_left.size() == 1);
  CHECK(empty_left.at(Word{1, 2}) == 1);

  const WordPoly onetwo = shuffle(Word{1}, Word{2});
  REQUIRE(onetwo.size() == 2);
  CHECK(onetwo.at(Word{1, 2}) == 1);
  CHECK(onetwo.at(Word{2, 1}) == 1);

  const WordPoly oneone = shuffle(Word{1}, Word{1});
  REQUIRE(oneone.size() == 1);
  CHECK(oneone.at(Word{1, 1}) == 2);
}

TEST_CASE("shuffle is commutative, graded, and binomially weighted") {
  const auto words = enumerate_words(2, 3);
  for (const Word& u : words) {
    for (const Word& v : words) {
      const WordPoly uv = shuffle(u, v);
      CHECK(uv == shuffle(v, u));
      CHECK(coeff_mass(uv) ==
            binomial(static_cast<std::int64_t>(u.size() + v.size()),
                     static_cast<std::int64_t>(u.size())));
      for (const auto& [w, c] : uv) {
        CHECK(w.size() == u.size() + v.size());
        CHECK(c > 0);
      }
    }
  }
}

TEST_CASE("shuffle is associative as a WordPoly product") {
  const auto words = enumerate_words(2, 2);
  for (const Word& u : words) {
    for (const Word& v : words) {
      for (const Word& w : words) {
        WordPoly pu, pv, pw;
        pu[u] = 1;
        pv[v] = 1;
        pw[w] = 1;
        CHECK(shuffle(shuffle(pu, pv), pw) == shuffle(pu, shuffle(pv, pw)));
      }
    }
  }
}

TEST_CASE("WordPoly shuffle is bilinear and drops zero terms") {
  WordPoly p;
  p[Word{1}] = 2;
  p[Word{2}] = -1;
  WordPoly q;
  q[Word{1}] = 1;
  const WordPoly r = shuffle(p, q);
  CHECK(r.at(Word{1, 1}) == 4);  // 2 * (1 shuffle 1)
  CHECK(r.at(Word{1, 2}) == -1);
  CHECK(r.at(Word{2, 1}) == -1);

  // (1 - 2) shuffle (1 + 2): the cross terms 12 and 21 cancel exactly and
  // must not be stored
  WordPoly a;
  a[Word{1}] = 1;
  a[Word{2}] = -1;
  WordPoly b;
  b[Word{1}] = 1;
  b[Word{2}] = 1;
  const WordPoly c = shuffle(a, b);
  REQUIRE(c.size() == 2);
  CHECK(c.at(Word{1, 1}) == 2);
  CHECK(c.at(Word{2, 2}) == -2);
  CHECK(c.count(Word{1, 2}) == 0);
  CHECK(c.count(Word{2, 1}) == 0);

  CHECK(shuffle(WordPoly{}, q).empty());
}

TEST_CASE("deconcat yields every split in order") {
  const auto d0 = deconcat(Word{});
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].first == Word{});
  CHECK(d0[0].second == Word{});

  const auto d12 = deconcat(Word{1, 2});
  REQUIRE(d12.size() == 3);
  CHECK(d12[0] == std::pair(Word{}, Word{1, 2}));
  CHECK(d12[1] == std::pair(Word{1}, Word{2}));
  CHECK(d12[2] == std::pair(Word{1, 2}, Word{}));
}

TEST_CASE("antipode reverses and signs by length parity") {
  CHECK(antipode(Word{1, 2}) == std::pair(1, Word{2, 1}));
  CHECK(antipode(Word{1}) == std::pair(-1, Word{1}));
  CHECK(antipode(Word{}) == std::pair(1, Word{}));
  // involution up to the squared sign
  const auto [s1, w1] = antipode(Word{1, 2, 3});
  const auto [s2, w2] = antipode(w1);
  CHECK(s1 * s2 == 1);
  CHECK(w2 == Word{1, 2, 3});
}
