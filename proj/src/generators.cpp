#include "bhlab/generators.hpp"

#include <cmath>

#include "bhlab/error.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

namespace {

using Terms = std::vector<std::pair<IndexTuple, Scalar>>;

Terms terms_of(const MultilinearForm& form) {
  Terms out;
  for (const auto& [t, c] : form.coeffs()) out.emplace_back(t, c);
  return out;
}

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && total > budget / base) return budget + 1;
    total *= base;
  }
  return total;
}

// Advances `t` (1-based) to the next tuple in lexicographic order.
bool next_tuple(IndexTuple& t, const std::vector<std::size_t>& dims) {
  for (std::size_t j = t.size(); j-- > 0;) {
    if (t[j] < dims[j]) {
      ++t[j];
      return true;
    }
    t[j] = 1;
  }
  return false;
}

}  // namespace

MultilinearForm littlewood_s2() {
  return MultilinearForm({2, 2}, Field::real,
                         {{{1, 1}, Scalar::integer(1)},
                          {{1, 2}, Scalar::integer(1)},
                          {{2, 1}, Scalar::integer(1)},
                          {{2, 2}, Scalar::integer(-1)}});
}

MultilinearForm s_family(int m) {
  if (m < 2) throw DomainError("s_family needs m >= 2");
  MultilinearForm current = littlewood_s2();
  for (int k = 3; k <= m; ++k) {
    const auto shift = static_cast<std::uint32_t>(1u << (k - 2));
    Terms terms;
    for (const auto& [t, c] : current.coeffs()) {
      const std::int64_t v = *c.exact_integer();
      // (x^(k)_1 + x^(k)_2) S_{k-1}(x, ...)
      IndexTuple a = t;
      a.push_back(1);
      terms.emplace_back(a, Scalar::integer(v));
      a.back() = 2;
      terms.emplace_back(a, Scalar::integer(v));
      // (x^(k)_1 - x^(k)_2) S_{k-1}(shift(x), ...)
      IndexTuple b = t;
      b[0] += shift;
      b.push_back(1);
      terms.emplace_back(b, Scalar::integer(v));
      b.back() = 2;
      terms.emplace_back(b, Scalar::integer(-v));
    }
    std::vector<std::size_t> dims(static_cast<std::size_t>(k), 2);
    dims[0] = std::size_t{1} << (k - 1);
    current = MultilinearForm::from_terms(std::move(dims), Field::real, terms);
  }
  return current;
}

MultilinearForm r_family(int m) {
  if (m < 2 || m % 2 != 0) throw DomainError("r_family needs an even m >= 2");
  const MultilinearForm s2 = littlewood_s2();
  Terms terms{{IndexTuple{}, Scalar::integer(1)}};
  for (int block = 0; block < m / 2; ++block) {
    Terms next;
    for (const auto& [t, c] : terms) {
      for (const auto& [u, d] : s2.coeffs()) {
        IndexTuple joined = t;
        joined.insert(joined.end(), u.begin(), u.end());
        next.emplace_back(std::move(joined), Scalar::integer(*c.exact_integer() * *d.exact_integer()));
      }
    }
    terms = std::move(next);
  }
  return MultilinearForm::from_terms(std::vector<std::size_t>(static_cast<std::size_t>(m), 2), Field::real,
                                     terms);
}

MultilinearForm a_family(int m) {
  if (m < 3 || m % 2 == 0) throw DomainError("a_family needs an odd m >= 3");
  Terms terms = terms_of(r_family(m - 1));
  for (auto& [t, c] : terms) t.push_back(1);
  std::vector<std::size_t> dims(static_cast<std::size_t>(m), 2);
  dims.back() = 1;
  return MultilinearForm::from_terms(std::move(dims), Field::real, terms);
}

MultilinearForm ksz_random(int m, int n, std::uint64_t seed, std::uint64_t budget) {
  if (m < 1 || n < 1) throw DomainError("ksz_random needs m, n >= 1");
  const std::uint64_t count = checked_power(static_cast<std::uint64_t>(n), m, budget);
  if (count > budget) throw BudgetError(count, budget, "ksz_random coefficient count exceeds budget");
  const std::vector<std::size_t> dims(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  SplitMix64 rng(seed);
  MultilinearForm::Coeffs coeffs;
  IndexTuple t(static_cast<std::size_t>(m), 1);
  do {
    coeffs.emplace_hint(coeffs.end(), t, Scalar::integer(rng.sign()));
  } while (next_tuple(t, dims));
  return MultilinearForm(dims, Field::real, std::move(coeffs));
}

CoeffDist coeff_dist_from_string(const std::string& name) {
  if (name == "pm1") return CoeffDist::pm1;
  if (name == "uniform") return CoeffDist::uniform;
  if (name == "gaussian") return CoeffDist::gaussian;
  throw DomainError("unknown coefficient distribution '" + name + "'");
}

std::string to_string(CoeffDist dist) {
  switch (dist) {
    case CoeffDist::pm1: return "pm1";
    case CoeffDist::uniform: return "uniform";
    case CoeffDist::gaussian: return "gaussian";
  }
  return "pm1";
}

MultilinearForm random_sparse(int m, const std::vector<std::size_t>& dims, double density, CoeffDist dist,
                              std::uint64_t seed, std::uint64_t budget) {
  if (m < 1 || dims.size() != static_cast<std::size_t>(m)) throw DomainError("random_sparse needs m slot dims");
  if (!(density > 0.0 && density <= 1.0)) throw DomainError("density must lie in (0, 1]");
  std::uint64_t count = 1;
  for (std::size_t n : dims) {
    if (n == 0) throw DomainError("slot dimensions must be positive");
    if (count > budget / n) throw BudgetError(budget + 1, budget, "random_sparse tensor exceeds budget");
    count *= n;
  }
  if (count > budget) throw BudgetError(count, budget, "random_sparse tensor exceeds budget");

  for (int attempt = 0; attempt < 2; ++attempt) {
    SplitMix64 rng(attempt == 0 ? seed : split_seed(seed, 0));
    MultilinearForm::Coeffs coeffs;
    IndexTuple t(static_cast<std::size_t>(m), 1);
    do {
      // Keep/drop and value draws happen for every tuple so the stream
      // position does not depend on earlier outcomes.
      const bool keep = rng.uniform() < density;
      Scalar value;
      switch (dist) {
        case CoeffDist::pm1: value = Scalar::integer(rng.sign()); break;
        case CoeffDist::uniform: value = Scalar::real(rng.uniform(-1.0, 1.0)); break;
        case CoeffDist::gaussian: value = Scalar::real(rng.gaussian()); break;
      }
      if (keep && !value.is_zero()) coeffs.emplace_hint(coeffs.end(), t, value);
    } while (next_tuple(t, dims));
    if (!coeffs.empty()) return MultilinearForm(dims, Field::real, std::move(coeffs));
  }
  throw DomainError("random_sparse drew an empty form twice; raise the density");
}

SeededSpec::Family family_from_string(const std::string& name) {
  using F = SeededSpec::Family;
  if (name == "s2" || name == "littlewood") return F::littlewood_s2;
  if (name == "s") return F::s;
  if (name == "r") return F::r;
  if (name == "a") return F::a;
  if (name == "ksz") return F::ksz;
  if (name == "random" || name == "random_sparse") return F::random_sparse;
  throw DomainError("unknown family '" + name + "'");
}

MultilinearForm generate(const SeededSpec& spec) {
  using F = SeededSpec::Family;
  switch (spec.family) {
    case F::littlewood_s2: return littlewood_s2();
    case F::s: return s_family(spec.m);
    case F::r: return r_family(spec.m);
    case F::a: return a_family(spec.m);
    case F::ksz: return ksz_random(spec.m, spec.n, spec.seed);
    case F::random_sparse: {
      auto dims = spec.dims;
      if (dims.empty()) dims.assign(static_cast<std::size_t>(spec.m), static_cast<std::size_t>(spec.n));
      return random_sparse(spec.m, dims, spec.density, spec.dist, spec.seed);
    }
  }
  throw DomainError("unknown family");
}

}  // namespace bhlab
