#include "dejean/word.hpp"

#include <algorithm>

namespace dejean {

namespace {

char letter_to_char(int letter) {
  if (letter >= 1 && letter <= 9) return static_cast<char>('0' + letter);
  if (letter >= 10 && letter <= 35) return static_cast<char>('A' + letter - 10);
  throw std::domain_error("no single-character encoding for letter " + std::to_string(letter));
}

int char_to_letter(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return 0;
}

// Border (failure-function) table over any equality-comparable sequence.
// table[l] = length of the longest proper border of the prefix of length l.
template <typename Seq>
void fill_border_table(const Seq& w, std::size_t len, std::vector<std::int64_t>& table) {
  table.assign(len + 1, 0);
  std::int64_t b = 0;
  for (std::size_t i = 1; i < len; ++i) {
    while (b > 0 && w[i] != w[b]) b = table[b];
    if (w[i] == w[b]) ++b;
    table[i + 1] = b;
  }
}

}  // namespace

Word::Word(std::vector<int> letters, int sigma) : letters_(std::move(letters)), sigma_(sigma) {
  if (sigma_ < 1) throw std::invalid_argument("word: alphabet size must be positive");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > sigma_)
      throw std::invalid_argument("word: letter " + std::to_string(letters_[i]) + " at index " +
                                  std::to_string(i) + " outside 1.." + std::to_string(sigma_));
  }
}

Word Word::parse(const std::string& text, int sigma) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int letter = char_to_letter(text[i]);
    if (letter == 0)
      throw std::invalid_argument(std::string("word: invalid character '") + text[i] +
                                  "' at index " + std::to_string(i));
    letters.push_back(letter);
  }
  return Word(std::move(letters), sigma);
}

Word Word::factor(std::size_t start, std::size_t len) const {
  if (start + len > letters_.size()) throw std::out_of_range("word: factor out of range");
  return Word(std::vector<int>(letters_.begin() + start, letters_.begin() + start + len), sigma_);
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (int letter : letters_) out.push_back(letter_to_char(letter));
  return out;
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1)
      throw std::invalid_argument("binary word: value " + std::to_string(bits_[i]) +
                                  " at index " + std::to_string(i) + " is not a bit");
  }
}

BinaryWord BinaryWord::parse(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw std::invalid_argument(std::string("binary word: invalid character '") + text[i] +
                                  "' at index " + std::to_string(i));
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::factor(std::size_t start, std::size_t len) const {
  if (start + len > bits_.size()) throw std::out_of_range("binary word: factor out of range");
  return BinaryWord(std::vector<std::uint8_t>(bits_.begin() + start, bits_.begin() + start + len));
}

void BinaryWord::append(const BinaryWord& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t bit : bits_) out.push_back(static_cast<char>('0' + bit));
  return out;
}

std::int64_t smallest_period(std::span<const int> w) {
  if (w.empty()) throw std::invalid_argument("empty word has no period");
  std::vector<std::int64_t> table;
  fill_border_table(w, w.size(), table);
  return static_cast<std::int64_t>(w.size()) - table[w.size()];
}

std::int64_t smallest_period(const Word& w) { return smallest_period(w.letters()); }

Rational exponent_of(std::span<const int> w) {
  return Rational(static_cast<std::int64_t>(w.size()), smallest_period(w));
}

Rational exponent_of(const Word& w) { return exponent_of(w.letters()); }

namespace {

// exp(a/b) > c/d, exactly.
inline bool ratio_greater(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d > static_cast<__int128>(c) * b;
}

}  // namespace

std::pair<Rational, RepetitionWitness> max_exponent_factor(std::span<const int> w) {
  if (w.empty()) throw std::invalid_argument("empty word has no factor exponent");
  const std::int64_t len = static_cast<std::int64_t>(w.size());
  // Suffix by suffix: the border table of w[s..] yields the smallest period
  // of every factor starting at s in amortized constant time per length.
  std::int64_t best_num = 1, best_den = 1;
  RepetitionWitness best{0, 1, 1, Rational(1)};
  std::vector<std::int64_t> table;
  for (std::int64_t s = 0; s < len; ++s) {
    const auto suffix = w.subspan(s);
    table.assign(suffix.size() + 1, 0);
    std::int64_t b = 0;
    for (std::int64_t l = 1; l <= static_cast<std::int64_t>(suffix.size()); ++l) {
      if (l > 1) {
        while (b > 0 && suffix[l - 1] != suffix[b]) b = table[b];
        if (suffix[l - 1] == suffix[b]) ++b;
        table[l] = b;
      }
      const std::int64_t q = l - table[l];
      if (ratio_greater(l, q, best_num, best_den)) {
        best_num = l;
        best_den = q;
        best = RepetitionWitness{s, l, q, Rational(l, q)};
      }
    }
  }
  return {best.exponent, best};
}

std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w) {
  return max_exponent_factor(w.letters());
}

std::optional<RepetitionWitness> has_factor_exceeding(std::span<const int> w, const Rational& threshold) {
  if (threshold < Rational(1)) throw std::invalid_argument("threshold must be at least 1");
  const std::int64_t len = static_cast<std::int64_t>(w.size());
  std::vector<std::int64_t> table;
  for (std::int64_t s = 0; s < len; ++s) {
    const auto suffix = w.subspan(s);
    table.assign(suffix.size() + 1, 0);
    std::int64_t b = 0;
    for (std::int64_t l = 1; l <= static_cast<std::int64_t>(suffix.size()); ++l) {
      if (l > 1) {
        while (b > 0 && suffix[l - 1] != suffix[b]) b = table[b];
        if (suffix[l - 1] == suffix[b]) ++b;
        table[l] = b;
      }
      const std::int64_t q = l - table[l];
      if (ratio_greater(l, q, threshold.num(), threshold.den()))
        return RepetitionWitness{s, l, q, Rational(l, q)};
    }
  }
  return std::nullopt;
}

std::optional<RepetitionWitness> has_factor_exceeding(const Word& w, const Rational& threshold) {
  return has_factor_exceeding(w.letters(), threshold);
}

Rational dejean_threshold(int n) {
  if (n < 2) throw std::invalid_argument("repetitive threshold needs n >= 2");
  if (n == 3) return Rational(7, 4);
  if (n == 4) return Rational(7, 5);
  return Rational(n, n - 1);
}

}  // namespace dejean
