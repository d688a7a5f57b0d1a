#include "bhlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "bhlab/error.hpp"

namespace bhlab {

namespace {

std::string tuple_string(const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::optional<std::int64_t> as_integer(double x) {
  if (std::isfinite(x) && std::abs(x) < kExactIntegerLimit && std::trunc(x) == x) {
    return static_cast<std::int64_t>(x);
  }
  return std::nullopt;
}

void check_tuple(const IndexTuple& t, const std::vector<std::size_t>& dims) {
  if (t.size() != dims.size()) {
    throw DomainError("tuple " + tuple_string(t) + " has length " + std::to_string(t.size()) +
                      ", form arity is " + std::to_string(dims.size()));
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0 || t[j] > dims[j]) {
      throw DomainError("tuple " + tuple_string(t) + ": index " + std::to_string(t[j]) +
                        " outside 1.." + std::to_string(dims[j]) + " in slot " +
                        std::to_string(j + 1));
    }
  }
}

}  // namespace

std::size_t distinct_count(const IndexTuple& t) {
  IndexTuple sorted = t;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// ---------------------------------------------------------------------------
// MultilinearForm

MultilinearForm::MultilinearForm(std::vector<std::size_t> dims, Field field, Coeffs coeffs)
    : dims_(std::move(dims)), field_(field) {
  if (dims_.empty()) throw DomainError("multilinear form needs arity m >= 1");
  for (std::size_t n : dims_) {
    if (n == 0) throw DomainError("slot dimensions must be positive");
  }
  for (auto& [t, c] : coeffs) {
    check_tuple(t, dims_);
    if (c.is_zero()) continue;
    Scalar v = c.as(field_);
    if (!v.exact_integer()) integer_ = false;
    coeffs_.emplace_hint(coeffs_.end(), t, v);
  }
}

MultilinearForm MultilinearForm::from_terms(std::vector<std::size_t> dims, Field field,
                                            const std::vector<std::pair<IndexTuple, Scalar>>& terms,
                                            bool accumulate) {
  Coeffs coeffs;
  for (const auto& [t, c] : terms) {
    auto [it, inserted] = coeffs.try_emplace(t, c.as(field));
    if (inserted) continue;
    if (!accumulate) throw DomainError("duplicate tuple " + tuple_string(t));
    const Scalar& old = it->second;
    if (field == Field::real) {
      if (old.exact_integer() && c.exact_integer()) {
        it->second = Scalar::integer(*old.exact_integer() + *c.exact_integer());
      } else {
        it->second = Scalar::real(old.re() + c.re());
      }
    } else {
      it->second = Scalar::complex(old.value() + c.value());
    }
  }
  return MultilinearForm(std::move(dims), field, std::move(coeffs));
}

Scalar MultilinearForm::coefficient(const IndexTuple& t) const {
  check_tuple(t, dims_);
  auto it = coeffs_.find(t);
  if (it == coeffs_.end()) return field_ == Field::real ? Scalar::integer(0) : Scalar::complex(0, 0);
  return it->second;
}

std::vector<std::uint32_t> MultilinearForm::active_coordinates(std::size_t slot) const {
  if (slot >= dims_.size()) throw DomainError("slot out of range");
  std::set<std::uint32_t> seen;
  for (const auto& [t, c] : coeffs_) seen.insert(t[slot]);
  return {seen.begin(), seen.end()};
}

Scalar coefficient(const MultilinearForm& form, const IndexTuple& t) { return form.coefficient(t); }

namespace {

template <typename Vec>
void check_args(const MultilinearForm& form, std::span<const Vec> args) {
  if (args.size() != form.arity()) {
    throw DomainError("expected " + std::to_string(form.arity()) + " arguments, got " +
                      std::to_string(args.size()));
  }
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (args[j].size() < form.dims()[j]) {
      throw DomainError("argument " + std::to_string(j + 1) + " has length " +
                        std::to_string(args[j].size()) + " < slot dimension " +
                        std::to_string(form.dims()[j]));
    }
  }
}

// Integer evaluation with overflow detection; nullopt when any input is not an
// integer or an intermediate leaves the int64 range.
std::optional<std::int64_t> evaluate_integer(const MultilinearForm& form,
                                             std::span<const RealVector> args) {
  if (!form.integer_coefficients()) return std::nullopt;
  std::vector<std::vector<std::int64_t>> iargs(args.size());
  for (std::size_t j = 0; j < args.size(); ++j) {
    iargs[j].reserve(form.dims()[j]);
    for (std::size_t i = 0; i < form.dims()[j]; ++i) {
      auto v = as_integer(args[j][i]);
      if (!v) return std::nullopt;
      iargs[j].push_back(*v);
    }
  }
  std::int64_t total = 0;
  for (const auto& [t, c] : form.coeffs()) {
    std::int64_t term = *c.exact_integer();
    for (std::size_t j = 0; j < t.size() && term != 0; ++j) {
      if (__builtin_mul_overflow(term, iargs[j][t[j] - 1], &term)) return std::nullopt;
    }
    if (__builtin_add_overflow(total, term, &total)) return std::nullopt;
  }
  if (std::abs(static_cast<double>(total)) >= kExactIntegerLimit) return std::nullopt;
  return total;
}

}  // namespace

Scalar evaluate_form(const MultilinearForm& form, std::span<const RealVector> args) {
  check_args(form, args);
  if (form.field() == Field::real) {
    if (auto exact = evaluate_integer(form, args)) return Scalar::integer(*exact);
    double total = 0.0;
    for (const auto& [t, c] : form.coeffs()) {
      double term = c.re();
      for (std::size_t j = 0; j < t.size(); ++j) term *= args[j][t[j] - 1];
      total += term;
    }
    return Scalar::real(total);
  }
  std::complex<double> total = 0.0;
  for (const auto& [t, c] : form.coeffs()) {
    std::complex<double> term = c.value();
    for (std::size_t j = 0; j < t.size(); ++j) term *= args[j][t[j] - 1];
    total += term;
  }
  return Scalar::complex(total);
}

Scalar evaluate_form(const MultilinearForm& form, std::span<const ComplexVector> args) {
  check_args(form, args);
  if (form.field() == Field::real) {
    std::vector<RealVector> real_args(args.size());
    for (std::size_t j = 0; j < args.size(); ++j) {
      for (const auto& z : args[j]) {
        if (z.imag() != 0.0) throw DomainError("complex argument passed to a real form");
        real_args[j].push_back(z.real());
      }
    }
    return evaluate_form(form, std::span<const RealVector>(real_args));
  }
  std::complex<double> total = 0.0;
  for (const auto& [t, c] : form.coeffs()) {
    std::complex<double> term = c.value();
    for (std::size_t j = 0; j < t.size(); ++j) term *= args[j][t[j] - 1];
    total += term;
  }
  return Scalar::complex(total);
}

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& [var, exp] = entries_[i];
    if (var == 0) throw DomainError("multi-index variables are 1-based");
    if (exp == 0) throw DomainError("multi-index exponents must be >= 1");
    if (i > 0 && entries_[i - 1].first == var) {
      throw DomainError("variable " + std::to_string(var) + " repeated in multi-index");
    }
    degree_ += exp;
  }
}

MultiIndex MultiIndex::from_tuple(const IndexTuple& t) {
  std::map<std::uint32_t, std::uint32_t> counts;
  for (std::uint32_t v : t) ++counts[v];
  return MultiIndex(std::vector<Entry>(counts.begin(), counts.end()));
}

std::uint32_t MultiIndex::exponent(std::uint32_t variable) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{variable, 0});
  return it != entries_.end() && it->first == variable ? it->second : 0;
}

MultiIndex MultiIndex::shifted(std::uint32_t variable, std::uint32_t count) const {
  std::vector<Entry> out = entries_;
  if (count == 0) return MultiIndex(std::move(out));
  auto it = std::find_if(out.begin(), out.end(), [&](const Entry& e) { return e.first == variable; });
  if (it != out.end()) {
    it->second += count;
  } else {
    out.emplace_back(variable, count);
  }
  return MultiIndex(std::move(out));
}

// ---------------------------------------------------------------------------
// HomogeneousPolynomial

HomogeneousPolynomial::HomogeneousPolynomial(std::uint32_t degree, std::size_t n, Field field,
                                             Coeffs coeffs)
    : degree_(degree), n_(n), field_(field) {
  for (auto& [alpha, c] : coeffs) {
    if (alpha.degree() != degree_) {
      throw DomainError("monomial of degree " + std::to_string(alpha.degree()) +
                        " in a polynomial of degree " + std::to_string(degree_));
    }
    if (alpha.max_variable() > n_) {
      throw DomainError("variable " + std::to_string(alpha.max_variable()) +
                        " exceeds dimension " + std::to_string(n_));
    }
    if (c.is_zero()) continue;
    Scalar v = c.as(field_);
    if (!v.exact_integer()) integer_ = false;
    coeffs_.emplace_hint(coeffs_.end(), alpha, v);
  }
}

Scalar HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) return field_ == Field::real ? Scalar::integer(0) : Scalar::complex(0, 0);
  return it->second;
}

bool HomogeneousPolynomial::multiaffine() const noexcept {
  for (const auto& [alpha, c] : coeffs_) {
    for (const auto& [v, e] : alpha.entries()) {
      if (e > 1) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> HomogeneousPolynomial::active_variables() const {
  std::set<std::uint32_t> seen;
  for (const auto& [alpha, c] : coeffs_) {
    for (const auto& [v, e] : alpha.entries()) seen.insert(v);
  }
  return {seen.begin(), seen.end()};
}

namespace {

template <typename T>
void check_point(const HomogeneousPolynomial& poly, std::span<const T> x) {
  if (x.size() < poly.dimension()) {
    throw DomainError("point has length " + std::to_string(x.size()) + " < dimension " +
                      std::to_string(poly.dimension()));
  }
}

template <typename T>
T power(T base, std::uint32_t exp) {
  T r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

}  // namespace

Scalar evaluate_poly(const HomogeneousPolynomial& poly, std::span<const double> x) {
  check_point(poly, x);
  if (poly.field() == Field::real) {
    bool integral = poly.integer_coefficients();
    for (std::size_t i = 0; integral && i < poly.dimension(); ++i) integral = as_integer(x[i]).has_value();
    if (integral) {
      std::int64_t total = 0;
      bool ok = true;
      for (const auto& [alpha, c] : poly.coeffs()) {
        std::int64_t term = *c.exact_integer();
        for (const auto& [v, e] : alpha.entries()) {
          auto xi = static_cast<std::int64_t>(x[v - 1]);
          for (std::uint32_t k = 0; k < e && ok; ++k) ok = !__builtin_mul_overflow(term, xi, &term);
        }
        ok = ok && !__builtin_add_overflow(total, term, &total);
        if (!ok) break;
      }
      if (ok && std::abs(static_cast<double>(total)) < kExactIntegerLimit) return Scalar::integer(total);
    }
    double total = 0.0;
    for (const auto& [alpha, c] : poly.coeffs()) {
      double term = c.re();
      for (const auto& [v, e] : alpha.entries()) term *= power(x[v - 1], e);
      total += term;
    }
    return Scalar::real(total);
  }
  std::complex<double> total = 0.0;
  for (const auto& [alpha, c] : poly.coeffs()) {
    std::complex<double> term = c.value();
    for (const auto& [v, e] : alpha.entries()) term *= power(x[v - 1], e);
    total += term;
  }
  return Scalar::complex(total);
}

Scalar evaluate_poly(const HomogeneousPolynomial& poly, std::span<const std::complex<double>> x) {
  check_point(poly, x);
  if (poly.field() == Field::real) {
    std::vector<double> real_x;
    for (const auto& z : x) {
      if (z.imag() != 0.0) throw DomainError("complex point passed to a real polynomial");
      real_x.push_back(z.real());
    }
    return evaluate_poly(poly, std::span<const double>(real_x));
  }
  std::complex<double> total = 0.0;
  for (const auto& [alpha, c] : poly.coeffs()) {
    std::complex<double> term = c.value();
    for (const auto& [v, e] : alpha.entries()) term *= power(x[v - 1], e);
    total += term;
  }
  return Scalar::complex(total);
}

}  // namespace bhlab
