#include <random>
#include <vector>

#include "doctest.h"

#include "dejean/carpi.hpp"
#include "dejean/pansiot.hpp"

using dejean::BinaryWord;
using dejean::ConditionIFactor;
using dejean::Permutation;
using dejean::Word;

namespace {

BinaryWord random_bits(std::mt19937_64& rng, std::size_t len) {
  std::vector<std::uint8_t> bits(len);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return BinaryWord(std::move(bits));
}

}  // namespace

TEST_CASE("gamma on pinned words") {
  CHECK(dejean::gamma(BinaryWord(), 5).empty());
  CHECK(dejean::gamma(BinaryWord::parse("0"), 5).str() == "4");
  CHECK(dejean::gamma(BinaryWord::parse("00"), 5).str() == "43");
  CHECK_THROWS_AS(dejean::gamma(BinaryWord::parse("0"), 1), std::invalid_argument);
}

TEST_CASE("gamma preserves length and never repeats adjacent letters") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    const int n = 3 + static_cast<int>(rng() % 28);
    const BinaryWord v = random_bits(rng, rng() % 120);
    const Word g = dejean::gamma(v, n);
    CHECK(g.size() == v.size());
    CHECK(g.sigma() == n);
    for (std::size_t j = 0; j + 1 < g.size(); ++j) CHECK(g[j] != g[j + 1]);
  }
  // One long word, as the adjacency property is about unbounded inputs.
  const Word g = dejean::gamma(random_bits(rng, 10000), 27);
  for (std::size_t j = 0; j + 1 < g.size(); ++j) CHECK(g[j] != g[j + 1]);
}

TEST_CASE("stabilizing tests on pinned words") {
  for (int k = 1; k <= 5; ++k) CHECK(dejean::is_k_stabilizing(BinaryWord(), 5, k));
  CHECK(dejean::is_k_stabilizing(BinaryWord::parse("0000"), 5, 4));
  CHECK(dejean::is_k_stabilizing(BinaryWord::parse("11111"), 5, 4));
  CHECK(!dejean::is_k_stabilizing(BinaryWord::parse("1"), 5, 1));
  CHECK_THROWS_AS(dejean::is_k_stabilizing(BinaryWord::parse("1"), 5, 0), std::out_of_range);
  CHECK_THROWS_AS(dejean::is_k_stabilizing(BinaryWord::parse("1"), 5, 6), std::out_of_range);
}

TEST_CASE("permutation-level stabilizing test") {
  CHECK(dejean::is_k_stabilizing_perm(Permutation::identity(7), 7));
  CHECK(!dejean::is_k_stabilizing_perm(Permutation::from_image({2, 3, 4, 1, 5}), 1));
  const Permutation p = Permutation::from_image({1, 2, 4, 3, 5});
  CHECK(dejean::is_k_stabilizing_perm(p, 2));
  CHECK(!dejean::is_k_stabilizing_perm(p, 3));
}

TEST_CASE("max stabilized prefix of fixed points") {
  CHECK(dejean::max_stabilized(Permutation::identity(9)) == 9);
  CHECK(dejean::max_stabilized(Permutation::from_image({2, 1, 3})) == 0);
  CHECK(dejean::max_stabilized(Permutation::from_image({1, 2, 4, 3, 5})) == 2);
}

TEST_CASE("stabilizing is nested and equals the max_stabilized cut") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const BinaryWord u = random_bits(rng, rng() % 40);
    const Permutation p = dejean::phi(u, n);
    const int ms = dejean::max_stabilized(p);
    for (int k = 1; k <= n; ++k) {
      CHECK(dejean::is_k_stabilizing_perm(p, k) == (ms >= k));
      if (k > 1 && dejean::is_k_stabilizing_perm(p, k)) CHECK(dejean::is_k_stabilizing_perm(p, k - 1));
    }
  }
}

TEST_CASE("condition (i) factors on pinned words") {
  CHECK(dejean::find_condition_i_factor(BinaryWord::parse("11111"), 5) == ConditionIFactor{0, 5, 4});
  CHECK(!dejean::find_condition_i_factor(BinaryWord::parse("0"), 5).has_value());
  CHECK(!dejean::find_condition_i_factor(BinaryWord(), 5).has_value());
}

TEST_CASE("condition (i) scan is empty on every f-image at n = 27") {
  const dejean::MorphismTable table(dejean::carpi_params(27));
  for (int a = 1; a <= table.params().m; ++a)
    CHECK(!dejean::find_condition_i_factor(table.image(a), 27).has_value());
}
