#include "dejean/pansiot.hpp"

#include <algorithm>
#include <stdexcept>

namespace dejean {

Word gamma(const BinaryWord& v, int n) {
  if (n < 2) throw std::invalid_argument("gamma needs n >= 2");
  const PrefixTable table(v, n);
  std::vector<int> letters(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) letters[i] = table.prefix(i + 1).preimage_of(1);
  return Word(std::move(letters), n);
}

bool is_k_stabilizing(const BinaryWord& u, int n, int k) {
  return is_k_stabilizing_perm(phi(u, n), k);
}

bool is_k_stabilizing_perm(const Permutation& p, int k) {
  if (k < 1 || k > p.degree()) throw std::out_of_range("stabilizing test: k outside 1..n");
  for (int j = 1; j <= k; ++j)
    if (p.image_of(j) != j) return false;
  return true;
}

int max_stabilized(const Permutation& p) {
  int k = 0;
  while (k < p.degree() && p.image_of(k + 1) == k + 1) ++k;
  return k;
}

std::optional<ConditionIFactor> find_condition_i_factor(const BinaryWord& v, int n) {
  if (n < 2) throw std::invalid_argument("condition (i) scan needs n >= 2");
  const PrefixTable table(v, n);
  const std::int64_t len = static_cast<std::int64_t>(v.size());
  // |u| < k(n-1) <= (n-1)^2 bounds the lengths worth scanning.
  const std::int64_t max_len = static_cast<std::int64_t>(n - 1) * (n - 1) - 1;
  for (std::int64_t s = 0; s < len; ++s) {
    const std::int64_t stop = std::min(len - s, max_len);
    for (std::int64_t l = 1; l <= stop; ++l) {
      const Permutation image = factor_image(table, s, s + l);
      const int k = std::min(max_stabilized(image), n - 1);
      if (k >= 1 && l < static_cast<std::int64_t>(k) * (n - 1))
        return ConditionIFactor{s, l, k};
    }
  }
  return std::nullopt;
}

}  // namespace dejean
