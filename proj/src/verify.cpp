#include "dejean/verify.hpp"

#include <atomic>
#include <chrono>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "json.hpp"

#include "dejean/permutation.hpp"

namespace dejean {
namespace {

Word triple_at(std::int64_t index, int m) {
  const std::int64_t mm = static_cast<std::int64_t>(m) * m;
  std::vector<int> letters{static_cast<int>(index / mm) + 1,
                           static_cast<int>((index / m) % m) + 1,
                           static_cast<int>(index % m) + 1};
  return Word(std::move(letters), m);
}

struct TripleResult {
  std::vector<StabilizerViolation> violations;
  std::vector<std::int64_t> factors_checked;
};

TripleResult check_triple(const MorphismTable& table, const SearchSpace& space, const Word& triple,
                          bool dedup, std::unordered_set<std::string>& seen_clean) {
  const BinaryWord v = table.apply(triple);
  const PrefixTable prefixes(v, space.n);
  const std::int64_t len = static_cast<std::int64_t>(v.size());

  TripleResult result;
  result.factors_checked.assign(space.r_values.size(), 0);
  for (std::size_t ri = 0; ri < space.r_values.size(); ++ri) {
    const int r = space.r_values[ri];
    const std::int64_t flen = static_cast<std::int64_t>(r) * (space.n - 1);
    const int k = SearchSpace::k_of(r);
    for (std::int64_t s = 0; s + flen <= len; ++s) {
      ++result.factors_checked[ri];
      std::string key;
      if (dedup) {
        key.assign(reinterpret_cast<const char*>(v.bits().data() + s), static_cast<std::size_t>(flen));
        if (seen_clean.contains(key)) continue;
      }
      const Permutation image = factor_image(prefixes, s, s + flen);
      if (is_k_stabilizing_perm(image, k)) {
        // Violations are never deduplicated; only clean factors enter the set.
        result.violations.push_back(StabilizerViolation{triple, s, flen, max_stabilized(image)});
      } else if (dedup) {
        seen_clean.insert(std::move(key));
      }
    }
  }
  return result;
}

}  // namespace

SearchSpace admissible_search_space(int n, bool override_range) {
  if (!override_range && (n < 27 || n > 29))
    throw std::invalid_argument("verification covers n in 27..29; pass the range override for other n");
  SearchSpace space;
  space.n = n;
  space.params = carpi_params(n);
  const int r_lo = space.params.p + 1;
  if (r_lo > 15) {
    space.note = "p+1 = " + std::to_string(r_lo) + " exceeds 15: no admissible factor lengths";
    return space;
  }
  for (int r = r_lo; r <= 15; ++r) space.r_values.push_back(r);
  if (SearchSpace::k_of(space.r_values.back()) > n)
    throw std::invalid_argument("search space needs n >= 16: stabilizer depth 16 exceeds n = " + std::to_string(n));
  return space;
}

VerificationReport verify_stabilizer_freeness(int n, const VerifyOptions& options) {
  if (options.jobs < 1)
    throw std::invalid_argument("jobs must be positive, got " + std::to_string(options.jobs));
  const auto started = std::chrono::steady_clock::now();

  const SearchSpace space = admissible_search_space(n, options.override_range);
  VerificationReport report;
  report.n = n;
  report.m = space.params.m;
  report.p = space.params.p;
  report.uniform_length = space.params.uniform_length;
  if (space.r_values.empty()) return report;

  const MorphismTable table(space.params);
  const int m = space.params.m;
  const std::int64_t total = static_cast<std::int64_t>(m) * m * m;

  std::vector<TripleResult> slots(static_cast<std::size_t>(total));
  std::atomic<std::int64_t> next{0};
  const auto worker = [&]() {
    std::unordered_set<std::string> seen_clean;
    for (std::int64_t t = next.fetch_add(1); t < total; t = next.fetch_add(1))
      slots[static_cast<std::size_t>(t)] =
          check_triple(table, space, triple_at(t, m), options.dedup_factors, seen_clean);
  };

  if (options.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(options.jobs));
    for (int j = 0; j < options.jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t ri = 0; ri < space.r_values.size(); ++ri) {
    FactorClassStats stats;
    stats.r = space.r_values[ri];
    stats.factor_length = static_cast<std::int64_t>(stats.r) * (n - 1);
    stats.words_examined = total;
    for (const TripleResult& slot : slots) stats.factors_checked += slot.factors_checked[ri];
    report.per_r.push_back(stats);
  }
  for (TripleResult& slot : slots)
    for (StabilizerViolation& violation : slot.violations) report.violations.push_back(std::move(violation));

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<VerificationReport> verify_range(int n_lo, int n_hi, const VerifyOptions& options) {
  if (n_lo > n_hi)
    throw std::invalid_argument("empty range: " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
  std::vector<VerificationReport> reports;
  reports.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) reports.push_back(verify_stabilizer_freeness(n, options));
  return reports;
}

bool cross_check_sample(int n, int sample_size, std::uint64_t seed, bool override_range) {
  if (sample_size < 0)
    throw std::invalid_argument("sample size must be non-negative, got " + std::to_string(sample_size));
  const SearchSpace space = admissible_search_space(n, override_range);
  if (space.r_values.empty()) return true;
  const MorphismTable table(space.params);
  const int m = space.params.m;
  const std::int64_t total = static_cast<std::int64_t>(m) * m * m;

  struct TripleCache {
    BinaryWord v;
    PrefixTable prefixes;
  };
  std::vector<std::unique_ptr<TripleCache>> cache(static_cast<std::size_t>(total));

  std::mt19937_64 rng(seed);
  for (int i = 0; i < sample_size; ++i) {
    const std::int64_t t = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(total));
    const int r = space.r_values[rng() % space.r_values.size()];
    auto& slot = cache[static_cast<std::size_t>(t)];
    if (!slot) {
      BinaryWord v = table.apply(triple_at(t, m));
      PrefixTable prefixes(v, n);
      slot = std::make_unique<TripleCache>(TripleCache{std::move(v), std::move(prefixes)});
    }
    const std::int64_t flen = static_cast<std::int64_t>(r) * (n - 1);
    const std::int64_t positions = static_cast<std::int64_t>(slot->v.size()) - flen + 1;
    if (positions <= 0) continue;
    const std::int64_t s = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(positions));

    const Permutation fast = factor_image(slot->prefixes, s, s + flen);
    const BinaryWord u = slot->v.factor(static_cast<std::size_t>(s), static_cast<std::size_t>(flen));
    if (!(fast == phi(u, n))) return false;
    const int k = SearchSpace::k_of(r);
    if (is_k_stabilizing_perm(fast, k) != is_k_stabilizing(u, n, k)) return false;
  }
  return true;
}

std::optional<ConditionIFactor> legacy_exhaustive_probe(int n, const Word& triple, bool override_range) {
  const SearchSpace space = admissible_search_space(n, override_range);
  const MorphismTable table(space.params);
  return find_condition_i_factor(table.apply(triple), n);
}

namespace {

nlohmann::json report_json(const VerificationReport& report, bool zero_elapsed) {
  nlohmann::json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["p"] = report.p;
  j["uniform_length"] = report.uniform_length;
  j["per_r"] = nlohmann::json::array();
  for (const FactorClassStats& stats : report.per_r)
    j["per_r"].push_back({{"r", stats.r},
                          {"factor_length", stats.factor_length},
                          {"words_examined", stats.words_examined},
                          {"factors_checked", stats.factors_checked}});
  j["violations"] = nlohmann::json::array();
  for (const StabilizerViolation& violation : report.violations)
    j["violations"].push_back({{"triple", violation.triple.str()},
                               {"start", violation.start},
                               {"length", violation.length},
                               {"max_stabilized", violation.max_stabilized}});
  j["elapsed_seconds"] = zero_elapsed ? 0.0 : report.elapsed_seconds;
  j["status"] = report.pass() ? "PASS" : "FAIL";
  return j;
}

}  // namespace

std::string to_json_string(const VerificationReport& report, bool zero_elapsed) {
  return report_json(report, zero_elapsed).dump(2);
}

std::string to_json_string(const std::vector<VerificationReport>& reports, bool zero_elapsed) {
  nlohmann::json j = nlohmann::json::array();
  for (const VerificationReport& report : reports) j.push_back(report_json(report, zero_elapsed));
  return j.dump(2);
}

}  // namespace dejean
