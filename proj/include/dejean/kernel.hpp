#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dejean/word.hpp"

namespace dejean {

// counts[a-1] = number of occurrences of letter a.
using CountVector = std::vector<std::int64_t>;

CountVector letter_counts(const Word& v, int m);

// ker psi: every letter count divisible by 4.
bool in_kernel(const Word& v, int m);

// Periods q of v whose length-q prefix lies in ker psi, ascending.
// q = |v| always counts as a period.
std::vector<std::int64_t> kernel_periods(const Word& v, int m);

// Smallest kernel period q of v with (n-1)(|v|+1) >= nq-3, if any.
// The empty word has none.
std::optional<std::int64_t> is_kernel_repetition(const Word& v, int n, int m);

// Factor [start, start+length) is a psi-kernel repetition with kernel
// period q; length is maximal for the (start, q) pair.
struct KernelWitness {
  std::int64_t start = 0;
  std::int64_t length = 0;
  std::int64_t q = 0;
  int n = 0;

  friend bool operator==(const KernelWitness&, const KernelWitness&) = default;
};

// All psi-kernel repetitions in w, one witness per (start, q) pair at
// maximal length, sorted by (start, q).
std::vector<KernelWitness> scan_kernel_repetitions(const Word& w, int n, int m);

// Depth-first search for a word of length >= target_length whose scan is
// empty. Letter order at every node is the rotation of (1..m) by seed.
// Empty result means the search space is exhausted.
std::optional<Word> generate_kernel_avoiding(int m, int n, std::int64_t target_length, std::uint64_t seed);

}  // namespace dejean
