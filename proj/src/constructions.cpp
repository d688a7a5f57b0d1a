#include "bhlab/constructions.hpp"

#include <algorithm>
#include <string>

#include "bhlab/error.hpp"

namespace bhlab {

Disjointified disjointify(const MultilinearForm& form) {
  const std::size_t m = form.arity();
  const std::size_t n = *std::max_element(form.dims().begin(), form.dims().end());
  SlotEmbedding emb{m, n};
  MultilinearForm::Coeffs coeffs;
  for (const auto& [t, c] : form.coeffs()) {
    IndexTuple u(m);
    for (std::size_t s = 0; s < m; ++s) u[s] = emb.map(s, t[s]);
    coeffs.emplace(std::move(u), c);
  }
  return {MultilinearForm(std::vector<std::size_t>(m, m * n), form.field(), std::move(coeffs)), emb};
}

HomogeneousPolynomial diagonal_polynomial(const MultilinearForm& form) {
  std::map<MultiIndex, Scalar> coeffs;
  std::size_t n = *std::max_element(form.dims().begin(), form.dims().end());
  for (const auto& [t, c] : form.coeffs()) {
    auto [it, inserted] = coeffs.try_emplace(MultiIndex::from_tuple(t), c);
    if (inserted) continue;
    Scalar& acc = it->second;
    if (form.field() == Field::real) {
      acc = acc.exact_integer() && c.exact_integer() ? Scalar::integer(*acc.exact_integer() + *c.exact_integer())
                                                     : Scalar::real(acc.re() + c.re());
    } else {
      acc = Scalar::complex(acc.value() + c.value());
    }
  }
  return HomogeneousPolynomial(static_cast<std::uint32_t>(form.arity()), n, form.field(), std::move(coeffs));
}

MultilinearForm recover_form(const HomogeneousPolynomial& poly, const SlotEmbedding& embedding,
                             const std::vector<std::size_t>& dims) {
  if (dims.size() != embedding.m) throw DomainError("dims do not match the embedding arity");
  MultilinearForm::Coeffs coeffs;
  for (const auto& [alpha, c] : poly.coeffs()) {
    IndexTuple t(embedding.m, 0);
    for (const auto& [v, e] : alpha.entries()) {
      const auto [slot, j] = embedding.invert(v);
      if (e != 1 || t[slot] != 0) throw DomainError("monomial is not in the image of the embedding");
      t[slot] = j;
    }
    if (std::find(t.begin(), t.end(), 0u) != t.end()) {
      throw DomainError("monomial does not touch every slot");
    }
    coeffs.emplace(std::move(t), c);
  }
  return MultilinearForm(dims, poly.field(), std::move(coeffs));
}

HomogeneousPolynomial lift_polynomial(const HomogeneousPolynomial& poly, int M, int m) {
  if (M < 1 || m < M) throw DomainError("lift_polynomial needs 1 <= M <= m");
  if (poly.degree() != static_cast<std::uint32_t>(M - 1)) {
    throw DomainError("lift_polynomial expects degree " + std::to_string(M - 1) + ", got " +
                      std::to_string(poly.degree()));
  }
  const auto extra = static_cast<std::uint32_t>(m - M + 1);
  std::map<MultiIndex, Scalar> coeffs;
  for (const auto& [alpha, c] : poly.coeffs()) coeffs.emplace(alpha.shifted(1, extra), c);
  return HomogeneousPolynomial(static_cast<std::uint32_t>(m), std::max<std::size_t>(poly.dimension(), 1),
                               poly.field(), std::move(coeffs));
}

}  // namespace bhlab
