#pragma once

#include <numbers>

namespace bhlab::constants {

inline constexpr double gamma = std::numbers::egamma;

// Growth rates of the best known multilinear upper bounds C * m^rate.
inline constexpr double complex_exponent_rate = (1.0 - gamma) / 2.0;                       // ~0.211392
inline constexpr double real_exponent_rate = (2.0 - std::numbers::ln2 - gamma) / 2.0;      // ~0.36482

// Constant C for which B_m <= C * m^rate holds in both fields.
inline constexpr double bound_base = 1.3;

// Rounded real rate used by theorem_upper_bound.
inline constexpr double rounded_real_rate = 0.365;

// 2m/(m+1): in [1, 2), strictly increasing, 4/3 at m = 2.
constexpr double bh_exponent(int m) { return 2.0 * m / (m + 1.0); }

}  // namespace bhlab::constants
