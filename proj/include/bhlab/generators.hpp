#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bhlab/core.hpp"

namespace bhlab {

// S_2(x, y) = x1 y1 + x1 y2 + x2 y1 - x2 y2.
MultilinearForm littlewood_s2();

// S_m, m >= 2:
//   S_m(x^(1..m)) = (x^(m)_1 + x^(m)_2) S_{m-1}(x^(1), ..., x^(m-1))
//                 + (x^(m)_1 - x^(m)_2) S_{m-1}(shift(x^(1)), ..., x^(m-1))
// where shift offsets slot-1 indices by 2^(m-2). Dims (2^(m-1), 2, ..., 2);
// 4^(m-1) coefficients, all +-1; at most three distinct indices per tuple.
MultilinearForm s_family(int m);

// R_m, m even: product of m/2 copies of S_2 on slot pairs (2i-1, 2i).
MultilinearForm r_family(int m);

// A_m, m odd >= 3: R_{m-1} on slots 1..m-1 times x^(m)_1.
MultilinearForm a_family(int m);

// Cap on generated coefficient counts.
inline constexpr std::uint64_t kDefaultGeneratorBudget = std::uint64_t{1} << 24;

// Dense +-1 form over {1..n}^m; signs drawn from SplitMix64(seed) with tuples
// visited in lexicographic order.
MultilinearForm ksz_random(int m, int n, std::uint64_t seed,
                           std::uint64_t budget = kDefaultGeneratorBudget);

enum class CoeffDist { pm1, uniform, gaussian };

CoeffDist coeff_dist_from_string(const std::string& name);
std::string to_string(CoeffDist dist);

// Each tuple (lexicographic order) is kept with probability `density` and
// given a coefficient from `dist`. An empty draw is retried once with a
// derived seed, then rejected.
MultilinearForm random_sparse(int m, const std::vector<std::size_t>& dims, double density, CoeffDist dist,
                              std::uint64_t seed, std::uint64_t budget = kDefaultGeneratorBudget);

// Family selector used by the CLI and the bindings.
struct SeededSpec {
  enum class Family { littlewood_s2, s, r, a, ksz, random_sparse };
  Family family = Family::s;
  int m = 2;
  int n = 2;
  std::vector<std::size_t> dims;
  double density = 1.0;
  CoeffDist dist = CoeffDist::pm1;
  std::uint64_t seed = 0;
};

SeededSpec::Family family_from_string(const std::string& name);
MultilinearForm generate(const SeededSpec& spec);

}  // namespace bhlab
