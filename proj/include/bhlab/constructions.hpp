#pragma once

#include <cstdint>
#include <utility>

#include "bhlab/core.hpp"

namespace bhlab {

// Interleaving sigma_i(j) = m (j - 1) + i. Images of distinct slots are
// disjoint and together cover {1, ..., m n}.
struct SlotEmbedding {
  std::size_t m = 1;
  std::size_t n = 1;  // largest source slot dimension

  std::uint32_t map(std::size_t slot, std::uint32_t j) const noexcept {
    return static_cast<std::uint32_t>(m * (j - 1) + slot + 1);
  }
  // (0-based slot, 1-based source index) of a target variable.
  std::pair<std::size_t, std::uint32_t> invert(std::uint32_t v) const noexcept {
    return {(v - 1) % m, static_cast<std::uint32_t>((v - 1) / m + 1)};
  }
};

struct Disjointified {
  MultilinearForm form;
  SlotEmbedding embedding;
};

// T1 with T1(e_{sigma_1(j_1)}, ..., e_{sigma_m(j_m)}) = T(e_{j_1}, ..., e_{j_m})
// and zero elsewhere; every slot dimension becomes m * max(n_j).
Disjointified disjointify(const MultilinearForm& form);

// P(x) = T1(x, ..., x). Tuples that collapse to the same monomial have their
// coefficients added.
HomogeneousPolynomial diagonal_polynomial(const MultilinearForm& form);

// Reads T back from the diagonal polynomial of a disjointified form.
MultilinearForm recover_form(const HomogeneousPolynomial& poly, const SlotEmbedding& embedding,
                             const std::vector<std::size_t>& dims);

// x_1^{m-M+1} P(x) for P homogeneous of degree M - 1.
HomogeneousPolynomial lift_polynomial(const HomogeneousPolynomial& poly, int M, int m);

}  // namespace bhlab
