#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "bhlab/core.hpp"

namespace bhlab {

enum class Bound { exact, lower_bound };

struct NormOptions {
  // Cap on enumerated sign assignments.
  std::uint64_t budget = std::uint64_t{1} << 24;
  // 0 = hardware concurrency. Results do not depend on this.
  unsigned threads = 1;
};

struct NormResult {
  double value = 0.0;
  // Set when the value was computed in exact integer arithmetic.
  std::optional<std::int64_t> exact_value;
  // One vector per slot (forms) or a single vector (polynomials).
  std::vector<ComplexVector> witness;
  Bound bound = Bound::lower_bound;
  // 0-based slot eliminated in closed form, if any.
  std::optional<std::size_t> eliminated_slot;
  // Enumerated assignments or evaluated candidates.
  std::uint64_t work = 0;

  bool exact() const noexcept { return bound == Bound::exact; }
  // Witness as real vectors; throws if a component has nonzero imaginary part.
  std::vector<RealVector> real_witness() const;
};

// Number of sign assignments exact_norm_real would enumerate.
std::uint64_t exact_norm_work(const MultilinearForm& form);

// Exact sup norm of a real form over the product of unit balls of l_inf.
//
// The form is affine in every coordinate, so the supremum over the product of
// cubes is attained at a vertex. One slot k (largest active support) is
// eliminated in closed form: for fixed signs in the other slots the form is a
// linear functional L in slot k and max over x^(k) of |L(x^(k))| = sum_j |L_j|.
// The remaining active signs are enumerated in Gray-code order with the first
// enumerated sign fixed to +1 (x^(1) -> -x^(1) leaves |T| unchanged).
//
// Among maximizers the lexicographically smallest sign assignment (slot-major,
// -1 < +1) is reported, so the witness does not depend on `threads`.
NormResult exact_norm_real(const MultilinearForm& form, const NormOptions& options = {});

// Test oracle: evaluates the form at every vertex of every cube, no shortcuts.
double brute_force_norm_real(const MultilinearForm& form, const NormOptions& options = {});

struct AscentOptions {
  std::uint64_t seed = 0;
  unsigned restarts = 8;
  unsigned max_rounds = 200;
  unsigned threads = 1;
};

// Alternating maximization over slots. Each slot update is exact: for fixed
// remaining slots the best vector is the (conjugate) sign/phase of the induced
// linear functional. Always a lower bound; works for both fields.
NormResult ascent_lower_bound(const MultilinearForm& form, const AscentOptions& options = {});

// Sup of |P| over the unit ball. Real multiaffine polynomials are maximized
// exactly by vertex enumeration; everything else goes through cyclic
// coordinate ascent (root isolation on [-1,1] for real, phase grid plus
// golden-section refinement on the circle for complex).
NormResult poly_lower_bound(const HomogeneousPolynomial& poly, const AscentOptions& options = {},
                            const NormOptions& exact_options = {});

}  // namespace bhlab
