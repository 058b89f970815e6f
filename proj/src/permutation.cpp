#include "dejean/permutation.hpp"

#include <stdexcept>

namespace dejean {

Permutation Permutation::identity(int n) {
  if (n < 0 || n > 255) throw std::invalid_argument("permutation: degree outside 0..255");
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n > 255) throw std::invalid_argument("permutation: degree outside 0..255");
  Permutation p;
  p.img_.resize(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = image[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("permutation: image is not a bijection on 1.." + std::to_string(n));
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

int Permutation::image_of(int point) const {
  if (point < 1 || point > degree()) throw std::out_of_range("permutation: point out of range");
  return img_[point - 1] + 1;
}

int Permutation::preimage_of(int point) const {
  if (point < 1 || point > degree()) throw std::out_of_range("permutation: point out of range");
  const std::uint8_t target = static_cast<std::uint8_t>(point - 1);
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == target) return i + 1;
  throw std::logic_error("permutation: broken bijection");
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::image() const {
  std::vector<int> out(degree());
  for (int i = 0; i < degree(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(img_[i] + 1);
  }
  out += "]";
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()) + ")");
  Permutation c;
  c.img_.resize(a.img_.size());
  for (std::size_t i = 0; i < a.img_.size(); ++i) c.img_[i] = b.img_[a.img_[i]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q;
  q.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < p.img_.size(); ++i) q.img_[p.img_[i]] = static_cast<std::uint8_t>(i);
  return q;
}

Permutation pansiot_generator(int n, int bit) {
  if (n < 2) throw std::invalid_argument("pansiot generator needs n >= 2");
  if (bit != 0 && bit != 1) throw std::invalid_argument("pansiot generator: bit must be 0 or 1");
  const int cycle = bit ? n : n - 1;
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  for (int i = 0; i < cycle; ++i) image[i] = (i + 1) % cycle + 1;
  return Permutation::from_image(image);
}

Permutation phi(const BinaryWord& v, int n) {
  const Permutation gen[2] = {pansiot_generator(n, 0), pansiot_generator(n, 1)};
  Permutation p = Permutation::identity(n);
  for (std::size_t i = 0; i < v.size(); ++i) p = compose(p, gen[v[i]]);
  return p;
}

PrefixTable::PrefixTable(const BinaryWord& v, int n) : n_(n) {
  const Permutation gen[2] = {pansiot_generator(n, 0), pansiot_generator(n, 1)};
  perms_.reserve(v.size() + 1);
  perms_.push_back(Permutation::identity(n));
  for (std::size_t i = 0; i < v.size(); ++i) perms_.push_back(compose(perms_.back(), gen[v[i]]));
}

const Permutation& PrefixTable::prefix(std::size_t i) const {
  if (i >= perms_.size()) throw std::out_of_range("prefix table: index out of range");
  return perms_[i];
}

Permutation factor_image(const PrefixTable& table, std::size_t i, std::size_t j) {
  if (i > j || j > table.word_length()) throw std::out_of_range("factor image: bad index pair");
  return compose(inverse(table.prefix(i)), table.prefix(j));
}

}  // namespace dejean
