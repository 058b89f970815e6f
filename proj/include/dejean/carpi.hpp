#pragma once

#include <cstdint>
#include <vector>

#include "dejean/word.hpp"

namespace dejean {

// Parameters of Carpi's uniform morphism f: A_m* -> B* for a given n.
//
//   m = floor((n-3)/6),  p = floor(n/2),
//   y = suffix of (01)^n of length n-1,
//   x = suffix of y of length n-1-6m.
//
// Every image f(a) has length (p+1)(n-1).
struct CarpiParams {
  int n = 0;
  int m = 0;
  int p = 0;
  BinaryWord y;
  BinaryWord x;
  std::int64_t uniform_length = 0;
};

CarpiParams carpi_params(int n);

// Image of a single letter:
//   f(1) = y^p x (101)^{2m}
//   f(a) = y^p x (101)^{2m-2a} 010 (101)^{2a-1}   for 2 <= a <= m.
BinaryWord f_image(int a, const CarpiParams& params);

// All m images built once; apply() concatenates cached images.
class MorphismTable {
 public:
  explicit MorphismTable(CarpiParams params);

  const CarpiParams& params() const { return params_; }
  const BinaryWord& image(int a) const;
  BinaryWord apply(const Word& w) const;

 private:
  CarpiParams params_;
  std::vector<BinaryWord> images_;
};

BinaryWord apply_f(const Word& w, const MorphismTable& table);

}  // namespace dejean
