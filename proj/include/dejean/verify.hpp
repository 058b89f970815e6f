#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dejean/carpi.hpp"
#include "dejean/pansiot.hpp"
#include "dejean/word.hpp"

namespace dejean {

// Factor lengths r(n-1) and stabilizer depths k = r+1 that have to be
// excluded: p+1 <= r <= 15, k = r+1 <= 16. Checking k = r+1 alone
// suffices, since fixing 1..k pointwise implies fixing 1..i for i < k.
struct SearchSpace {
  int n = 0;
  CarpiParams params;
  std::vector<int> r_values;
  std::string note;

  static int k_of(int r) { return r + 1; }
};

// n in 27..29 unless override_range; empty r_values (with a note) when
// p+1 > 15.
SearchSpace admissible_search_space(int n, bool override_range = false);

struct FactorClassStats {
  int r = 0;
  std::int64_t factor_length = 0;
  std::int64_t words_examined = 0;
  std::int64_t factors_checked = 0;

  friend bool operator==(const FactorClassStats&, const FactorClassStats&) = default;
};

struct StabilizerViolation {
  Word triple;
  std::int64_t start = 0;
  std::int64_t length = 0;
  int max_stabilized = 0;

  friend bool operator==(const StabilizerViolation&, const StabilizerViolation&) = default;
};

struct VerificationReport {
  int n = 0;
  int m = 0;
  int p = 0;
  std::int64_t uniform_length = 0;
  std::vector<FactorClassStats> per_r;
  std::vector<StabilizerViolation> violations;
  double elapsed_seconds = 0.0;

  bool pass() const { return violations.empty(); }
};

struct VerifyOptions {
  int jobs = 1;
  bool override_range = false;
  bool dedup_factors = false;
};

// For every triple w in A_m^3 and every admissible r, test each factor of
// f(w) of length r(n-1) for membership in Stab_n(r+1). Output is identical
// for every jobs value.
VerificationReport verify_stabilizer_freeness(int n, const VerifyOptions& options = {});

// One report per n in [n_lo, n_hi].
std::vector<VerificationReport> verify_range(int n_lo, int n_hi, const VerifyOptions& options = {});

// Recomputes sample_size random (triple, start, r) cells from scratch via
// phi and compares with the prefix-table path; true iff all agree.
bool cross_check_sample(int n, int sample_size, std::uint64_t seed, bool override_range = false);

// Full condition (i) scan of one f-image triple: every factor length below
// (n-1)^2, every k up to n-1. Empirical check that the restricted search
// space above misses nothing on this input.
std::optional<ConditionIFactor> legacy_exhaustive_probe(int n, const Word& triple, bool override_range = false);

std::string to_json_string(const VerificationReport& report, bool zero_elapsed = false);
std::string to_json_string(const std::vector<VerificationReport>& reports, bool zero_elapsed = false);

}  // namespace dejean
