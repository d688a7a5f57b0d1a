// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bhlab/verify.hpp"

using namespace bhlab;

namespace {

const std::map<int, std::string> kTitles{
    {1, "S-family norms, sums and ratios"},
    {2, "R/A family norms, monomial counts and ratios"},
    {3, "Littlewood sharp witness"},
    {4, "exact norm vs brute-force oracle"},
    {5, "l2 coefficient sum below the norm"},
    {6, "interpolation exponent algebra and inequality"},
    {7, "restricted ratio below the explicit upper bound"},
    {8, "symmetrization chain"},
    {9, "lift construction"},
    {10, "KSZ scaling slope"},
    {11, "search recovers sqrt(2)"},
    {12, "determinism across thread counts"},
};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyOptions seq;
  seq.threads = 1;
  seq.deterministic = true;
  const auto base = run_verify_suite(seq);
  VerifyOptions par;
  par.threads = 8;
  const auto wide = run_verify_suite(par);

  std::map<int, std::vector<const VerifyOutcome*>> by_criterion;
  for (const auto& o : base) by_criterion[o.criterion].push_back(&o);

  // Whole-suite comparison on top of the in-suite thread check.
  bool identical = base.size() == wide.size();
  for (std::size_t i = 0; identical && i < base.size(); ++i) {
    identical = base[i].name == wide[i].name && base[i].computed == wide[i].computed && base[i].pass == wide[i].pass;
  }

  int failures = 0;
  for (const auto& [id, title] : kTitles) {
    bool pass = by_criterion.count(id) > 0;
    std::string detail;
    for (const auto* o : by_criterion[id]) {
      pass = pass && o->pass;
      if (!o->pass) detail += " [" + o->name + ": computed " + format_double(o->computed) + "]";
    }
    if (id == 12 && !identical) {
      pass = false;
      detail += " [suite values differ between 1 and 8 threads]";
    }
    if (!pass) ++failures;
    std::printf("criterion %2d %s: %s%s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(kTitles.size()) - failures, kTitles.size(), secs);
  return failures == 0 ? 0 : 1;
}
