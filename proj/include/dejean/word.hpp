#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dejean/rational.hpp"

namespace dejean {

// Finite word over the 1-based alphabet {1..sigma}.
//
// Text form uses one ASCII character per letter: '1'..'9' for 1..9 and
// 'A'..'Z' for 10..35, which covers every alphabet used here.
class Word {
 public:
  Word() = default;
  Word(std::vector<int> letters, int sigma);

  static Word parse(const std::string& text, int sigma);

  int sigma() const { return sigma_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::span<const int> letters() const { return letters_; }

  Word factor(std::size_t start, std::size_t len) const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
  int sigma_ = 1;
};

// Word over B = {0,1}.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  static BinaryWord parse(const std::string& text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  BinaryWord factor(std::size_t start, std::size_t len) const;
  void append(const BinaryWord& other);
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A repetition inside a word: the factor [start, start+length) has period
// `period`, and `exponent` is length/period in lowest terms.
struct RepetitionWitness {
  std::int64_t start = 0;
  std::int64_t length = 0;
  std::int64_t period = 0;
  Rational exponent;

  friend bool operator==(const RepetitionWitness&, const RepetitionWitness&) = default;
};

// Least q >= 1 with w[i] = w[i+q] for all 0 <= i < |w|-q, via the border
// table: q = |w| - (longest proper border).
std::int64_t smallest_period(std::span<const int> w);
std::int64_t smallest_period(const Word& w);

// |w| / smallest_period(w), reduced.
Rational exponent_of(std::span<const int> w);
Rational exponent_of(const Word& w);

// Maximum of exponent_of over all non-empty factors, with one witness.
// Ties break to the smallest start, then the smallest length.
std::pair<Rational, RepetitionWitness> max_exponent_factor(std::span<const int> w);
std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w);

// First factor (smallest start, then length) of exponent strictly greater
// than the threshold, if any. Comparison is exact.
std::optional<RepetitionWitness> has_factor_exceeding(std::span<const int> w, const Rational& threshold);
std::optional<RepetitionWitness> has_factor_exceeding(const Word& w, const Rational& threshold);

// Repetitive threshold conjectured by Dejean: 7/4 for n=3, 7/5 for n=4,
// n/(n-1) otherwise.
Rational dejean_threshold(int n);

}  // namespace dejean
