#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bhlab/scalar.hpp"

namespace bhlab {

// (i_1, ..., i_m), 1-based.
using IndexTuple = std::vector<std::uint32_t>;

using RealVector = std::vector<double>;
using ComplexVector = std::vector<std::complex<double>>;

// Number of distinct values among the entries of `t`.
std::size_t distinct_count(const IndexTuple& t);

// Sparse coefficient tensor of an m-linear form on l_inf^{n_1} x ... x l_inf^{n_m}.
// Immutable after construction; zero coefficients are never stored.
class MultilinearForm {
 public:
  using Coeffs = std::map<IndexTuple, Scalar>;

  MultilinearForm(std::vector<std::size_t> dims, Field field, Coeffs coeffs);

  // Builds a form from a term list. Duplicate tuples are summed when
  // `accumulate` is set and rejected otherwise.
  static MultilinearForm from_terms(std::vector<std::size_t> dims, Field field,
                                    const std::vector<std::pair<IndexTuple, Scalar>>& terms,
                                    bool accumulate = false);

  std::size_t arity() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  Field field() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  // True when every stored coefficient carries an exact integer.
  bool integer_coefficients() const noexcept { return integer_; }

  Scalar coefficient(const IndexTuple& t) const;

  // Sorted 1-based coordinates of `slot` (0-based) that occur in a stored tuple.
  std::vector<std::uint32_t> active_coordinates(std::size_t slot) const;

  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) {
    return a.dims_ == b.dims_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<std::size_t> dims_;
  Field field_;
  Coeffs coeffs_;
  bool integer_ = true;
};

Scalar coefficient(const MultilinearForm& form, const IndexTuple& t);

// Sum over stored tuples of coeff * prod_j args[j][i_j]. Vectors longer than
// the slot dimension are allowed; extra entries are ignored. The real overload
// uses integer arithmetic when all coefficients and arguments are integers.
Scalar evaluate_form(const MultilinearForm& form, std::span<const RealVector> args);
Scalar evaluate_form(const MultilinearForm& form, std::span<const ComplexVector> args);

// Exponent vector alpha stored as sorted (variable, exponent) pairs with
// variables 1-based and exponents >= 1.
class MultiIndex {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  MultiIndex() = default;
  // Rejects zero variables, zero exponents and repeated variables.
  explicit MultiIndex(std::vector<Entry> entries);

  // Multi-index counting how often each value occurs in `t`.
  static MultiIndex from_tuple(const IndexTuple& t);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::size_t omega() const noexcept { return entries_.size(); }
  std::uint32_t max_variable() const noexcept { return entries_.empty() ? 0 : entries_.back().first; }
  std::uint32_t exponent(std::uint32_t variable) const noexcept;

  // alpha + count * e_variable.
  MultiIndex shifted(std::uint32_t variable, std::uint32_t count) const;

  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.entries_ <=> b.entries_; }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

// Number of variables occurring in alpha.
inline std::size_t omega(const MultiIndex& alpha) { return alpha.omega(); }

// m-homogeneous polynomial in n variables, sparse in its coefficients c_alpha.
class HomogeneousPolynomial {
 public:
  using Coeffs = std::map<MultiIndex, Scalar>;

  HomogeneousPolynomial(std::uint32_t degree, std::size_t n, Field field, Coeffs coeffs);

  std::uint32_t degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool integer_coefficients() const noexcept { return integer_; }

  Scalar coefficient(const MultiIndex& alpha) const;

  // Every exponent is at most one.
  bool multiaffine() const noexcept;

  // Sorted variables occurring in some monomial.
  std::vector<std::uint32_t> active_variables() const;

  friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return a.degree_ == b.degree_ && a.n_ == b.n_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::uint32_t degree_;
  std::size_t n_;
  Field field_;
  Coeffs coeffs_;
  bool integer_ = true;
};

Scalar evaluate_poly(const HomogeneousPolynomial& poly, std::span<const double> x);
Scalar evaluate_poly(const HomogeneousPolynomial& poly, std::span<const std::complex<double>> x);

}  // namespace bhlab
