#pragma once

#include <string>
#include <vector>

#include "bhlab/io.hpp"

namespace bhlab {

// One reproduced quantity. pass <=> |computed - expected| <= tolerance * max(1, |expected|).
// Inequality families are reported as violation counts with expected 0.
struct VerifyOutcome {
  int criterion = 0;
  std::string name;
  double expected = 0.0;
  std::string provenance;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

bool outcome_passes(double computed, double expected, double tolerance);
VerifyOutcome make_outcome(int criterion, std::string name, double expected, std::string provenance,
                           double computed, double tolerance);

struct VerifyOptions {
  std::string suite = "paper";  // "paper" or "quick"
  unsigned threads = 1;
  bool deterministic = false;
};

std::vector<VerifyOutcome> run_verify_suite(const VerifyOptions& options);

Json to_json(const VerifyOutcome& outcome);
Json to_json(const std::vector<VerifyOutcome>& outcomes);
std::string to_csv(const std::vector<VerifyOutcome>& outcomes);

}  // namespace bhlab
