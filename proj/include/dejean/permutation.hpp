#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dejean/word.hpp"

namespace dejean {

// Permutation of {1..n} under the right action point . p. Points are 1-based
// at every interface; storage is 0-based and never leaks out.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_image(const std::vector<int>& image);  // image[i] = where i+1 maps

  int degree() const { return static_cast<int>(img_.size()); }
  int image_of(int point) const;     // point . p
  int preimage_of(int point) const;  // the x with x . p = point
  bool is_identity() const;

  std::vector<int> image() const;  // 1-based copy
  std::string str() const;         // "[2,3,4,1,5]"

  friend bool operator==(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& p);

 private:
  Permutation() = default;
  std::vector<std::uint8_t> img_;
};

// Apply a first, then b: point . compose(a,b) = (point . a) . b.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Pansiot's generators: bit 0 maps to the (n-1)-cycle (1 2 ... n-1) fixing n,
// bit 1 to the n-cycle (1 2 ... n).
Permutation pansiot_generator(int n, int bit);

// Morphism phi: left-to-right fold of the generators, phi(uv) = compose(phi(u), phi(v)).
Permutation phi(const BinaryWord& v, int n);

// All prefix images phi(v[0..i)) of a binary word, built incrementally.
class PrefixTable {
 public:
  PrefixTable(const BinaryWord& v, int n);

  int degree() const { return n_; }
  std::size_t word_length() const { return perms_.size() - 1; }
  const Permutation& prefix(std::size_t i) const;

 private:
  int n_;
  std::vector<Permutation> perms_;
};

// phi(v[i..j)) recovered from the table as inverse(prefix(i)) * prefix(j).
Permutation factor_image(const PrefixTable& table, std::size_t i, std::size_t j);

}  // namespace dejean
