#include "dejean/carpi.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dejean {
namespace {

void repeat_into(std::vector<std::uint8_t>& out, const BinaryWord& block, int times) {
  for (int t = 0; t < times; ++t)
    for (std::size_t i = 0; i < block.size(); ++i) out.push_back(static_cast<std::uint8_t>(block[i]));
}

void repeat_101(std::vector<std::uint8_t>& out, int times) {
  for (int t = 0; t < times; ++t) {
    out.push_back(1);
    out.push_back(0);
    out.push_back(1);
  }
}

}  // namespace

CarpiParams carpi_params(int n) {
  if (n < 9) throw std::invalid_argument("carpi_params: n must be at least 9, got " + std::to_string(n));
  CarpiParams params;
  params.n = n;
  params.m = (n - 3) / 6;
  params.p = n / 2;

  std::vector<std::uint8_t> alternating(2 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < alternating.size(); ++i) alternating[i] = static_cast<std::uint8_t>(i % 2);
  const std::size_t ylen = static_cast<std::size_t>(n - 1);
  params.y = BinaryWord(std::vector<std::uint8_t>(alternating.end() - ylen, alternating.end()));

  const int xlen = n - 1 - 6 * params.m;
  if (xlen < 0) throw std::invalid_argument("carpi_params: y shorter than 6m at n=" + std::to_string(n));
  params.x = params.y.factor(ylen - static_cast<std::size_t>(xlen), static_cast<std::size_t>(xlen));

  params.uniform_length = static_cast<std::int64_t>(params.p + 1) * (n - 1);
  return params;
}

BinaryWord f_image(int a, const CarpiParams& params) {
  if (a < 1 || a > params.m)
    throw std::invalid_argument("f_image: letter " + std::to_string(a) + " outside 1.." + std::to_string(params.m));
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(params.uniform_length));
  repeat_into(bits, params.y, params.p);
  repeat_into(bits, params.x, 1);
  if (a == 1) {
    repeat_101(bits, 2 * params.m);
  } else {
    repeat_101(bits, 2 * params.m - 2 * a);
    bits.push_back(0);
    bits.push_back(1);
    bits.push_back(0);
    repeat_101(bits, 2 * a - 1);
  }
  return BinaryWord(std::move(bits));
}

MorphismTable::MorphismTable(CarpiParams params) : params_(std::move(params)) {
  images_.reserve(static_cast<std::size_t>(params_.m));
  for (int a = 1; a <= params_.m; ++a) images_.push_back(f_image(a, params_));
}

const BinaryWord& MorphismTable::image(int a) const {
  if (a < 1 || a > params_.m)
    throw std::invalid_argument("image: letter " + std::to_string(a) + " outside 1.." + std::to_string(params_.m));
  return images_[static_cast<std::size_t>(a - 1)];
}

BinaryWord MorphismTable::apply(const Word& w) const {
  std::vector<std::uint8_t> bits;
  bits.reserve(w.size() * static_cast<std::size_t>(params_.uniform_length));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BinaryWord& img = image(w[i]);
    for (std::size_t j = 0; j < img.size(); ++j) bits.push_back(static_cast<std::uint8_t>(img[j]));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord apply_f(const Word& w, const MorphismTable& table) { return table.apply(w); }

}  // namespace dejean
