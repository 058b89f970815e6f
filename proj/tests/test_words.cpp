#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "dejean/rational.hpp"
#include "dejean/word.hpp"

using dejean::BinaryWord;
using dejean::Rational;
using dejean::RepetitionWitness;
using dejean::Word;

TEST_CASE("rational reduces and compares exactly") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(6, -4).num() == -3);
  CHECK(Rational(3, 2) > Rational(27, 26));
  CHECK(Rational(7, 5) < Rational(7, 4));
  CHECK(Rational(2).str() == "2/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parses a and a/b") {
  CHECK(Rational::parse("27/26") == Rational(27, 26));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/2x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("999999999999999999999"), std::invalid_argument);
}

TEST_CASE("word text round trip and validation") {
  const Word w = Word::parse("12312", 3);
  CHECK(w.size() == 5);
  CHECK(w.str() == "12312");
  CHECK(Word::parse("A5Z", 35).str() == "A5Z");
  CHECK(Word::parse("", 4).empty());
  CHECK_THROWS_WITH_AS(Word::parse("12x", 3), "word: invalid character 'x' at index 2", std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("14", 3), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<int>{0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Word(std::vector<int>{1}, 0), std::invalid_argument);

  const BinaryWord b = BinaryWord::parse("0110");
  CHECK(b.str() == "0110");
  CHECK(b.factor(1, 2).str() == "11");
  CHECK_THROWS_WITH_AS(BinaryWord::parse("012"), "binary word: invalid character '2' at index 2",
                       std::invalid_argument);
}

TEST_CASE("smallest period on pinned words") {
  CHECK(dejean::smallest_period(Word::parse("1111", 1)) == 1);
  CHECK(dejean::smallest_period(Word::parse("121", 2)) == 2);    // pattern 010
  CHECK(dejean::smallest_period(Word::parse("12312", 3)) == 3);  // pattern abcab
  CHECK_THROWS_WITH_AS(dejean::smallest_period(Word()), "empty word has no period", std::invalid_argument);
}

TEST_CASE("exponent of pinned words") {
  CHECK(dejean::exponent_of(Word::parse("121", 2)) == Rational(3, 2));
  CHECK(dejean::exponent_of(Word::parse("11", 1)) == Rational(2));
  CHECK(dejean::exponent_of(Word::parse("12312", 3)) == Rational(5, 3));
}

TEST_CASE("max exponent factor with tie-broken witness") {
  const auto [e1, w1] = dejean::max_exponent_factor(Word::parse("1122", 2));  // pattern 0011
  CHECK(e1 == Rational(2));
  CHECK(w1 == RepetitionWitness{0, 2, 1, Rational(2)});

  const auto [e2, w2] = dejean::max_exponent_factor(Word::parse("1", 1));
  CHECK(e2 == Rational(1));
  CHECK(w2 == RepetitionWitness{0, 1, 1, Rational(1)});

  const auto [e3, w3] = dejean::max_exponent_factor(Word::parse("1221221", 2));  // pattern 0110110
  CHECK(e3 == Rational(7, 3));
  CHECK(w3 == RepetitionWitness{0, 7, 3, Rational(7, 3)});

  CHECK_THROWS_AS(dejean::max_exponent_factor(Word()), std::invalid_argument);
}

TEST_CASE("has factor exceeding is strict and tie-broken") {
  const Word w010 = Word::parse("121", 2);
  CHECK(!dejean::has_factor_exceeding(w010, Rational(3, 2)).has_value());
  const auto hit = dejean::has_factor_exceeding(w010, Rational(7, 5));
  REQUIRE(hit.has_value());
  CHECK(*hit == RepetitionWitness{0, 3, 2, Rational(3, 2)});

  // First factor of "0101" past 27/26 by (start, length) order: "010".
  const auto first = dejean::has_factor_exceeding(Word::parse("1212", 2), Rational(27, 26));
  REQUIRE(first.has_value());
  CHECK(*first == RepetitionWitness{0, 3, 2, Rational(3, 2)});
  CHECK(first->exponent > Rational(27, 26));

  CHECK_THROWS_AS(dejean::has_factor_exceeding(w010, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("dejean threshold table") {
  CHECK(dejean::dejean_threshold(2) == Rational(2));
  CHECK(dejean::dejean_threshold(3) == Rational(7, 4));
  CHECK(dejean::dejean_threshold(4) == Rational(7, 5));
  CHECK(dejean::dejean_threshold(5) == Rational(5, 4));
  CHECK(dejean::dejean_threshold(27) == Rational(27, 26));
  CHECK_THROWS_AS(dejean::dejean_threshold(1), std::invalid_argument);
  for (int n = 5; n < 40; ++n) CHECK(dejean::dejean_threshold(n) > dejean::dejean_threshold(n + 1));
}

TEST_CASE("smallest period matches brute force exhaustively to length 16") {
  // Alphabet 3 subsumes sizes 1 and 2. Counter instead of per-word CHECK:
  // 64.5M words.
  std::int64_t mismatches = 0;
  oracle::for_each_word(3, 16, [&](std::span<const int> w) {
    if (w.empty()) return;
    if (dejean::smallest_period(w) != oracle::period_brute(w)) ++mismatches;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("smallest period matches brute force on random long words") {
  std::mt19937_64 rng(20260819);
  for (int i = 0; i < 500; ++i) {
    const int sigma = static_cast<int>(rng() % 3) + 1;
    const auto letters = oracle::random_letters(rng, 17 + static_cast<std::int64_t>(rng() % 48), sigma);
    CHECK(dejean::smallest_period(letters) == oracle::period_brute(letters));
  }
}

TEST_CASE("max exponent dominates every factor exponent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto letters = oracle::random_letters(rng, 1 + static_cast<std::int64_t>(rng() % 24), 2 + static_cast<int>(rng() % 2));
    const std::span<const int> w(letters);
    const auto [max_exp, witness] = dejean::max_exponent_factor(w);
    CHECK(dejean::exponent_of(w.subspan(witness.start, witness.length)) == max_exp);
    for (std::size_t s = 0; s < letters.size(); ++s)
      for (std::size_t l = 1; s + l <= letters.size(); ++l)
        CHECK(dejean::exponent_of(w.subspan(s, l)) <= max_exp);
  }
}

TEST_CASE("threshold witness exists iff max exponent exceeds it") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto letters = oracle::random_letters(rng, 1 + static_cast<std::int64_t>(rng() % 40), 2 + static_cast<int>(rng() % 2));
    const Rational threshold(1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 26));
    if (threshold < Rational(1)) continue;
    const auto [max_exp, witness] = dejean::max_exponent_factor(letters);
    const auto hit = dejean::has_factor_exceeding(letters, threshold);
    CHECK(hit.has_value() == (max_exp > threshold));
    if (hit) {
      const auto expected = oracle::first_exceeding_brute(letters, threshold);
      REQUIRE(expected.has_value());
      CHECK(hit->start == expected->start);
      CHECK(hit->length == expected->length);
      CHECK(hit->period == expected->period);
    }
  }
}

TEST_CASE("exponent bounds: 1 <= e <= |w|, max iff single-letter power") {
  oracle::for_each_word(2, 10, [](std::span<const int> w) {
    if (w.empty()) return;
    const Rational e = dejean::exponent_of(w);
    CHECK(e >= Rational(1));
    CHECK(e <= Rational(static_cast<std::int64_t>(w.size())));
    bool constant = true;
    for (int letter : w) constant = constant && letter == w[0];
    CHECK((e == Rational(static_cast<std::int64_t>(w.size()))) == constant);
  });
}
