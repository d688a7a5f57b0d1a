#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhlab/core.hpp"
#include "bhlab/io.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/sums.hpp"

namespace bhlab {

struct SearchConfig {
  int m = 2;
  std::vector<std::size_t> dims{2, 2};
  double p = 0.0;  // <= 0: 2m/(m+1)
  Restriction restriction;  // full or card_leq
  std::uint64_t budget = 10000;  // ratio evaluations, split evenly over restarts
  unsigned restarts = 8;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  NormOptions norm;
  // Optional starting point for restart 0; must fit inside `dims`.
  std::optional<MultilinearForm> start;
};

struct SearchResult {
  MultilinearForm best;
  RatioReport report;
  std::uint64_t evaluations = 0;
  unsigned best_restart = 0;
};

// Random +-1 restarts followed by steepest single-sign-flip ascent on
// restricted_sum / exact_norm. Only strict improvements are taken, so the
// incumbent never decreases; a restart ends at a local maximum or when its
// share of the budget is spent. Restart r draws from split_seed(seed, r).
SearchResult maximize_ratio(const SearchConfig& config);

// Rows of named values plus run metadata. Values are JSON scalars so the
// table can be written as JSON or CSV without loss.
struct ExperimentTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json metadata = Json::object();
  Json summary = Json::object();

  Json to_json() const;
  std::string to_csv() const;
};

// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string content_hash(const Json& value);

// maximize_ratio for each (m, M) with M <= m, using S_m-shaped dims
// (2^(m-1), 2, ..., 2) and seeding restart 0 with S_m (M >= 3) or R_m / A_m
// (M = 2). Every row carries theorem_upper_bound(m, M) for comparison. Values
// are empirical lower bounds, not optimal constants.
ExperimentTable constant_table(const std::vector<int>& ms, const std::vector<int>& Ms, const SearchConfig& defaults);

struct KszOptions {
  unsigned threads = 1;
  NormOptions norm;
};

// For each n draws `samples` KSZ forms (seed split by n then sample), computes
// exact norms and reports median / min of ||T|| / n^((m+1)/2). summary.slope
// is the least-squares slope of log2(median ||T||) against log2(n).
ExperimentTable ksz_scaling_experiment(int m, const std::vector<int>& ns, unsigned samples, std::uint64_t seed,
                                       const KszOptions& options = {});

}  // namespace bhlab
