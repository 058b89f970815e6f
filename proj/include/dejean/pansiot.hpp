#pragma once

#include <cstdint>
#include <optional>

#include "dejean/permutation.hpp"
#include "dejean/word.hpp"

namespace dejean {

// Pansiot's coding gamma_n: the i-th output letter is the unique a_i with
// a_i . phi(b_1...b_i) = 1, i.e. the preimage of 1 under the i-th prefix
// permutation. Length is preserved.
Word gamma(const BinaryWord& v, int n);

// u is k-stabilizing when phi(u) fixes each of the points 1..k.
bool is_k_stabilizing(const BinaryWord& u, int n, int k);
bool is_k_stabilizing_perm(const Permutation& p, int k);

// Largest k >= 0 with image_of(j) = j for all j <= k.
int max_stabilized(const Permutation& p);

struct ConditionIFactor {
  std::int64_t start = 0;
  std::int64_t length = 0;
  int k = 0;  // largest valid k

  friend bool operator==(const ConditionIFactor&, const ConditionIFactor&) = default;
};

// First non-empty factor u of v (by start, then length) that is k-stabilizing
// with |u| < k(n-1) for some k <= n-1. Intended for small inputs; the main
// verification restricts its search space instead of calling this.
std::optional<ConditionIFactor> find_condition_i_factor(const BinaryWord& v, int n);

}  // namespace dejean
