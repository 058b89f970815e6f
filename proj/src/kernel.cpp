#include "dejean/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dejean {
namespace {

constexpr int kMaxPackedAlphabet = 32;

void check_alphabet(int m) {
  if (m < 1) throw std::invalid_argument("kernel: m must be positive, got " + std::to_string(m));
  if (m > kMaxPackedAlphabet)
    throw std::invalid_argument("kernel: alphabets larger than 32 letters are not supported");
}

void check_order(int n) {
  if (n < 2) throw std::invalid_argument("kernel: n must be at least 2, got " + std::to_string(n));
}

// Letter counts mod 4, two bits per letter.
std::uint64_t bump_counts(std::uint64_t packed, int letter) {
  const int shift = 2 * (letter - 1);
  const std::uint64_t cur = (packed >> shift) & 3u;
  return (packed & ~(std::uint64_t{3} << shift)) | (((cur + 1) & 3u) << shift);
}

// packed[i] holds the counts of v[0..i) mod 4; validates letters.
std::vector<std::uint64_t> packed_prefix_counts(const Word& v, int m) {
  check_alphabet(m);
  std::vector<std::uint64_t> packed(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > m)
      throw std::invalid_argument("kernel: letter " + std::to_string(v[i]) + " outside 1.." + std::to_string(m));
    packed[i + 1] = bump_counts(packed[i], v[i]);
  }
  return packed;
}

// Largest q allowed by (n-1)(len+1) >= nq-3.
std::int64_t q_bound(std::int64_t len, int n) {
  return (static_cast<std::int64_t>(n - 1) * (len + 1) + 3) / n;
}

// border[i] = length of the longest proper border of w[0..i).
template <class Letters>
void fill_borders(const Letters& w, std::int64_t len, std::vector<std::int64_t>& border) {
  border.assign(static_cast<std::size_t>(len + 1), 0);
  for (std::int64_t i = 1; i < len; ++i) {
    std::int64_t b = border[i];
    while (b > 0 && w[i] != w[b]) b = border[b];
    border[i + 1] = (w[i] == w[b]) ? b + 1 : 0;
  }
}

}  // namespace

CountVector letter_counts(const Word& v, int m) {
  if (m < 1) throw std::invalid_argument("kernel: m must be positive, got " + std::to_string(m));
  CountVector counts(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > m)
      throw std::invalid_argument("kernel: letter " + std::to_string(v[i]) + " outside 1.." + std::to_string(m));
    ++counts[static_cast<std::size_t>(v[i] - 1)];
  }
  return counts;
}

bool in_kernel(const Word& v, int m) {
  const CountVector counts = letter_counts(v, m);
  return std::all_of(counts.begin(), counts.end(), [](std::int64_t c) { return c % 4 == 0; });
}

std::vector<std::int64_t> kernel_periods(const Word& v, int m) {
  const std::vector<std::uint64_t> packed = packed_prefix_counts(v, m);
  const std::int64_t len = static_cast<std::int64_t>(v.size());
  std::vector<std::int64_t> border;
  fill_borders(v.letters(), len, border);
  std::vector<std::int64_t> periods;
  if (len == 0) return periods;
  for (std::int64_t b = border[len];; b = border[b]) {
    const std::int64_t q = len - b;
    if (packed[q] == 0) periods.push_back(q);
    if (b == 0) break;
  }
  std::sort(periods.begin(), periods.end());
  return periods;
}

std::optional<std::int64_t> is_kernel_repetition(const Word& v, int n, int m) {
  check_order(n);
  if (v.empty()) return std::nullopt;
  const std::int64_t qmax = q_bound(static_cast<std::int64_t>(v.size()), n);
  for (std::int64_t q : kernel_periods(v, m))
    if (q <= qmax) return q;
  return std::nullopt;
}

std::vector<KernelWitness> scan_kernel_repetitions(const Word& w, int n, int m) {
  check_order(n);
  const std::vector<std::uint64_t> packed = packed_prefix_counts(w, m);
  const std::int64_t len = static_cast<std::int64_t>(w.size());
  std::vector<KernelWitness> witnesses;
  std::vector<std::int64_t> mismatch;
  for (std::int64_t q = 1; q <= len; ++q) {
    // mismatch[s] = first i >= s with w[i] != w[i+q], or len-q.
    mismatch.assign(static_cast<std::size_t>(len - q + 1), len - q);
    for (std::int64_t s = len - q - 1; s >= 0; --s)
      mismatch[s] = (w[s] != w[s + q]) ? s : mismatch[s + 1];
    for (std::int64_t s = 0; s + q <= len; ++s) {
      if (packed[s + q] != packed[s]) continue;
      const std::int64_t max_len = mismatch[s] - s + q;
      if (static_cast<std::int64_t>(n - 1) * (max_len + 1) >= static_cast<std::int64_t>(n) * q - 3)
        witnesses.push_back(KernelWitness{s, max_len, q, n});
    }
  }
  std::sort(witnesses.begin(), witnesses.end(), [](const KernelWitness& a, const KernelWitness& b) {
    return a.start != b.start ? a.start < b.start : a.q < b.q;
  });
  return witnesses;
}

std::optional<Word> generate_kernel_avoiding(int m, int n, std::int64_t target_length, std::uint64_t seed) {
  check_alphabet(m);
  check_order(n);
  if (target_length < 1)
    throw std::invalid_argument("generator: target length must be positive, got " + std::to_string(target_length));

  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    order[static_cast<std::size_t>(i)] = static_cast<int>((seed + static_cast<std::uint64_t>(i)) % static_cast<std::uint64_t>(m)) + 1;

  std::vector<int> letters;
  std::vector<std::uint64_t> packed{0};
  std::vector<int> choice{0};
  std::vector<int> reversed;
  std::vector<std::int64_t> border;

  // A violation created by appending a letter must end at the new position,
  // so only suffixes of the extended word are scanned. Periods of a suffix
  // are read off the border chain of the reversed word.
  const auto extends_clean = [&](int a) {
    const std::int64_t len = static_cast<std::int64_t>(letters.size()) + 1;
    reversed.assign(1, a);
    reversed.insert(reversed.end(), letters.rbegin(), letters.rend());
    fill_borders(reversed, len, border);
    const std::uint64_t packed_last = bump_counts(packed.back(), a);
    const auto packed_at = [&](std::int64_t i) { return i == len ? packed_last : packed[static_cast<std::size_t>(i)]; };
    for (std::int64_t suffix = 1; suffix <= len; ++suffix) {
      const std::int64_t qmax = q_bound(suffix, n);
      const std::int64_t s = len - suffix;
      for (std::int64_t b = border[suffix];; b = border[b]) {
        const std::int64_t q = suffix - b;
        if (q > qmax) break;
        if (packed_at(s + q) == packed_at(s)) return false;
        if (b == 0) break;
      }
    }
    return true;
  };

  while (static_cast<std::int64_t>(letters.size()) < target_length) {
    bool advanced = false;
    while (choice.back() < m) {
      const int a = order[static_cast<std::size_t>(choice.back()++)];
      if (extends_clean(a)) {
        letters.push_back(a);
        packed.push_back(bump_counts(packed.back(), a));
        choice.push_back(0);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (letters.empty()) return std::nullopt;
      letters.pop_back();
      packed.pop_back();
      choice.pop_back();
    }
  }
  return Word(std::move(letters), m);
}

}  // namespace dejean
