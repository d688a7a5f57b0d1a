#include "bhlab/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bhlab/error.hpp"
#include "bhlab/parallel.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

std::vector<RealVector> NormResult::real_witness() const {
  std::vector<RealVector> out;
  out.reserve(witness.size());
  for (const auto& v : witness) {
    RealVector r;
    r.reserve(v.size());
    for (const auto& z : v) {
      if (z.imag() != 0.0) throw DomainError("witness is not real");
      r.push_back(z.real());
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

constexpr unsigned kMaxEnumeratedBits = 62;

// Enumeration plan shared by the work estimate and the engine.
struct VertexPlan {
  std::size_t eliminated = 0;
  std::vector<std::vector<std::uint32_t>> active;  // per slot
  // Enumerated variables in lexicographic order: (slot, coordinate).
  std::vector<std::pair<std::size_t, std::uint32_t>> vars;
};

VertexPlan make_plan(const MultilinearForm& form) {
  VertexPlan plan;
  const std::size_t m = form.arity();
  plan.active.resize(m);
  for (std::size_t s = 0; s < m; ++s) plan.active[s] = form.active_coordinates(s);
  for (std::size_t s = 1; s < m; ++s) {
    if (plan.active[s].size() > plan.active[plan.eliminated].size()) plan.eliminated = s;
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (s == plan.eliminated) continue;
    for (std::uint32_t c : plan.active[s]) plan.vars.emplace_back(s, c);
  }
  return plan;
}

std::uint64_t plan_work(const VertexPlan& plan) {
  const std::size_t bits = plan.vars.size();
  if (bits == 0) return 1;
  if (bits - 1 >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (bits - 1);
}

struct Term {
  std::uint32_t row;                // position of t[k] in active[k]
  std::vector<std::uint32_t> vars;  // enumerated variable ids of the other slots
  std::int64_t icoeff;
  double coeff;
};

// Best assignment seen by one chunk. Codes hold variable v at bit (B-1-v), so
// integer order on codes is lexicographic order on assignments (-1 = bit 0).
struct ChunkBest {
  double value = -1.0;
  std::int64_t ivalue = -1;
  std::uint64_t code = 0;
  std::uint64_t work = 0;
};

class VertexEngine {
 public:
  VertexEngine(const MultilinearForm& form, VertexPlan plan)
      : plan_(std::move(plan)), bits_(plan_.vars.size()) {
    const std::size_t k = plan_.eliminated;
    const auto& rows = plan_.active[k];
    std::vector<std::vector<std::int32_t>> var_id(form.arity());
    for (std::size_t s = 0; s < form.arity(); ++s) var_id[s].assign(form.dims()[s] + 1, -1);
    for (std::size_t v = 0; v < plan_.vars.size(); ++v) {
      var_id[plan_.vars[v].first][plan_.vars[v].second] = static_cast<std::int32_t>(v);
    }
    integer_ = form.integer_coefficients();
    double l1 = 0.0;
    for (const auto& [t, c] : form.coeffs()) {
      Term term;
      term.row = static_cast<std::uint32_t>(std::lower_bound(rows.begin(), rows.end(), t[k]) - rows.begin());
      for (std::size_t s = 0; s < t.size(); ++s) {
        if (s != k) term.vars.push_back(static_cast<std::uint32_t>(var_id[s][t[s]]));
      }
      term.coeff = c.re();
      term.icoeff = integer_ ? *c.exact_integer() : 0;
      l1 += std::abs(term.coeff);
      terms_.push_back(std::move(term));
    }
    if (l1 >= 0x1.0p62) integer_ = false;
    var_terms_.resize(bits_);
    row_terms_.resize(rows.size());
    for (std::uint32_t i = 0; i < terms_.size(); ++i) {
      for (std::uint32_t v : terms_[i].vars) var_terms_[v].push_back(i);
      row_terms_[terms_[i].row].push_back(i);
    }
  }

  bool integer() const noexcept { return integer_; }
  std::size_t bits() const noexcept { return bits_; }

  // Enumerates every code with the given prefix on the first `prefix_bits`
  // variables (variable 0 is always +1).
  ChunkBest run_chunk(std::uint64_t prefix, unsigned prefix_bits) const {
    const std::size_t free = bits_ - prefix_bits;
    std::uint64_t code = prefix << free;
    std::vector<std::int8_t> sign(bits_);
    for (std::size_t v = 0; v < bits_; ++v) sign[v] = bit(code, v) ? 1 : -1;

    std::vector<std::int8_t> term_sign(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      std::int8_t s = 1;
      for (std::uint32_t v : terms_[i].vars) s = static_cast<std::int8_t>(s * sign[v]);
      term_sign[i] = s;
    }
    std::vector<std::int64_t> irow(row_terms_.size(), 0);
    std::vector<double> drow(row_terms_.size(), 0.0);
    for (std::size_t r = 0; r < row_terms_.size(); ++r) {
      if (integer_) {
        for (std::uint32_t i : row_terms_[r]) irow[r] += term_sign[i] * terms_[i].icoeff;
      } else {
        drow[r] = row_value(r, term_sign);
      }
    }

    ChunkBest best;
    auto consider = [&] {
      ++best.work;
      if (integer_) {
        std::int64_t v = 0;
        for (std::int64_t x : irow) v += x < 0 ? -x : x;
        if (v > best.ivalue || (v == best.ivalue && code < best.code)) {
          best.ivalue = v;
          best.value = static_cast<double>(v);
          best.code = code;
        }
      } else {
        double v = 0.0;
        for (double x : drow) v += std::abs(x);
        if (v > best.value || (v == best.value && code < best.code)) {
          best.value = v;
          best.code = code;
        }
      }
    };

    consider();
    const std::uint64_t steps = free == 0 ? 1 : (std::uint64_t{1} << free);
    std::vector<std::uint32_t> touched_rows;
    std::vector<char> row_mark(row_terms_.size(), 0);
    for (std::uint64_t step = 1; step < steps; ++step) {
      // Gray code: flip the variable matching the lowest set bit of step.
      const unsigned low = static_cast<unsigned>(std::countr_zero(step));
      const std::size_t v = bits_ - 1 - low;
      sign[v] = static_cast<std::int8_t>(-sign[v]);
      code ^= std::uint64_t{1} << low;
      for (std::uint32_t i : var_terms_[v]) {
        const Term& t = terms_[i];
        if (integer_) {
          irow[t.row] -= 2 * term_sign[i] * t.icoeff;
        } else if (!row_mark[t.row]) {
          row_mark[t.row] = 1;
          touched_rows.push_back(t.row);
        }
        term_sign[i] = static_cast<std::int8_t>(-term_sign[i]);
      }
      if (!integer_) {
        for (std::uint32_t r : touched_rows) {
          drow[r] = row_value(r, term_sign);
          row_mark[r] = 0;
        }
        touched_rows.clear();
      }
      consider();
    }
    return best;
  }

  // Slot vectors for `code`, with the eliminated slot set to the sign of the
  // induced functional (+1 on zero and inactive coordinates).
  std::vector<ComplexVector> witness(const MultilinearForm& form, std::uint64_t code) const {
    std::vector<ComplexVector> w(form.arity());
    for (std::size_t s = 0; s < form.arity(); ++s) w[s].assign(form.dims()[s], 1.0);
    std::vector<std::int8_t> sign(bits_);
    for (std::size_t v = 0; v < bits_; ++v) {
      sign[v] = bit(code, v) ? 1 : -1;
      w[plan_.vars[v].first][plan_.vars[v].second - 1] = static_cast<double>(sign[v]);
    }
    const auto& rows = plan_.active[plan_.eliminated];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      double value = 0.0;
      std::int64_t ivalue = 0;
      for (std::uint32_t i : row_terms_[r]) {
        std::int8_t s = 1;
        for (std::uint32_t v : terms_[i].vars) s = static_cast<std::int8_t>(s * sign[v]);
        if (integer_) {
          ivalue += s * terms_[i].icoeff;
        } else {
          value += s * terms_[i].coeff;
        }
      }
      const bool negative = integer_ ? ivalue < 0 : value < 0.0;
      w[plan_.eliminated][rows[r] - 1] = negative ? -1.0 : 1.0;
    }
    return w;
  }

 private:
  bool bit(std::uint64_t code, std::size_t v) const noexcept { return (code >> (bits_ - 1 - v)) & 1u; }

  double row_value(std::size_t r, const std::vector<std::int8_t>& term_sign) const {
    double x = 0.0;
    for (std::uint32_t i : row_terms_[r]) x += term_sign[i] * terms_[i].coeff;
    return x;
  }

  VertexPlan plan_;
  std::size_t bits_;
  bool integer_ = true;
  std::vector<Term> terms_;
  std::vector<std::vector<std::uint32_t>> var_terms_;
  std::vector<std::vector<std::uint32_t>> row_terms_;
};

void require_real(const MultilinearForm& form, const char* op) {
  if (form.field() != Field::real) {
    throw DomainError(std::string(op) + " needs a real form; use ascent_lower_bound for complex forms");
  }
}

}  // namespace

std::uint64_t exact_norm_work(const MultilinearForm& form) { return plan_work(make_plan(form)); }

NormResult exact_norm_real(const MultilinearForm& form, const NormOptions& options) {
  require_real(form, "exact_norm_real");
  VertexPlan plan = make_plan(form);
  const std::uint64_t work = plan_work(plan);
  if (plan.vars.size() > kMaxEnumeratedBits + 1 || work > options.budget) {
    throw BudgetError(work, options.budget, "exact norm enumeration exceeds budget");
  }
  const std::size_t eliminated = plan.eliminated;
  VertexEngine engine(form, std::move(plan));

  NormResult result;
  result.bound = Bound::exact;
  result.eliminated_slot = eliminated;
  const std::size_t bits = engine.bits();
  if (form.empty()) {
    result.witness = engine.witness(form, 0);
    result.exact_value = 0;
    return result;
  }

  // Variable 0 is pinned to +1; split the next few variables into fixed
  // chunks. Chunk boundaries are independent of the thread count.
  const unsigned chunk_bits = bits <= 1 ? 0 : static_cast<unsigned>(std::min<std::size_t>(bits - 1, 6));
  const std::size_t chunks = std::size_t{1} << chunk_bits;
  std::vector<ChunkBest> partial(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    const std::uint64_t prefix = bits == 0 ? 0 : ((std::uint64_t{1} << chunk_bits) | c);
    partial[c] = engine.run_chunk(prefix, bits == 0 ? 0 : chunk_bits + 1);
  });

  ChunkBest best = partial[0];
  std::uint64_t total_work = partial[0].work;
  for (std::size_t c = 1; c < chunks; ++c) {
    const ChunkBest& p = partial[c];
    total_work += p.work;
    const bool better = engine.integer() ? (p.ivalue > best.ivalue || (p.ivalue == best.ivalue && p.code < best.code))
                                         : (p.value > best.value || (p.value == best.value && p.code < best.code));
    if (better) best = p;
  }
  result.value = best.value;
  if (engine.integer()) result.exact_value = best.ivalue;
  result.work = total_work;
  result.witness = engine.witness(form, best.code);
  return result;
}

double brute_force_norm_real(const MultilinearForm& form, const NormOptions& options) {
  require_real(form, "brute_force_norm_real");
  std::size_t total_bits = 0;
  for (std::size_t n : form.dims()) total_bits += n;
  if (total_bits >= 63 || (std::uint64_t{1} << total_bits) > options.budget) {
    const std::uint64_t need = total_bits >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                                : std::uint64_t{1} << total_bits;
    throw BudgetError(need, options.budget, "brute-force enumeration exceeds budget");
  }
  const std::uint64_t count = std::uint64_t{1} << total_bits;
  std::vector<RealVector> args(form.arity());
  for (std::size_t s = 0; s < form.arity(); ++s) args[s].resize(form.dims()[s]);
  double best = 0.0;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::size_t b = 0;
    for (auto& v : args) {
      for (double& x : v) x = (code >> b++) & 1u ? 1.0 : -1.0;
    }
    best = std::max(best, evaluate_form(form, std::span<const RealVector>(args)).abs());
  }
  return best;
}

// ---------------------------------------------------------------------------
// Alternating maximization

namespace {

struct AscentRun {
  double value = 0.0;
  std::vector<ComplexVector> point;
  std::uint64_t work = 0;
};

template <typename Scalar_>
AscentRun ascend_form(const MultilinearForm& form, std::uint64_t seed, unsigned max_rounds) {
  const std::size_t m = form.arity();
  SplitMix64 rng(seed);
  std::vector<std::vector<Scalar_>> x(m);
  for (std::size_t s = 0; s < m; ++s) {
    x[s].resize(form.dims()[s]);
    for (auto& xi : x[s]) {
      if constexpr (std::is_same_v<Scalar_, double>) {
        xi = rng.sign();
      } else {
        xi = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
      }
    }
  }

  std::vector<std::pair<const IndexTuple*, Scalar_>> terms;
  terms.reserve(form.size());
  for (const auto& [t, c] : form.coeffs()) {
    if constexpr (std::is_same_v<Scalar_, double>) {
      terms.emplace_back(&t, c.re());
    } else {
      terms.emplace_back(&t, c.value());
    }
  }

  AscentRun run;
  double value = 0.0;
  std::vector<Scalar_> functional;
  for (unsigned round = 0; round < max_rounds; ++round) {
    const double before = value;
    for (std::size_t s = 0; s < m; ++s) {
      functional.assign(form.dims()[s], Scalar_{});
      for (const auto& [t, c] : terms) {
        Scalar_ prod = c;
        for (std::size_t l = 0; l < m; ++l) {
          if (l != s) prod *= x[l][(*t)[l] - 1];
        }
        functional[(*t)[s] - 1] += prod;
      }
      double total = 0.0;
      for (std::size_t j = 0; j < functional.size(); ++j) {
        const double mag = std::abs(functional[j]);
        total += mag;
        if (mag == 0.0) continue;
        if constexpr (std::is_same_v<Scalar_, double>) {
          x[s][j] = functional[j] < 0.0 ? -1.0 : 1.0;
        } else {
          x[s][j] = std::conj(functional[j]) / mag;
        }
      }
      value = total;
      ++run.work;
    }
    if (round > 0 && value - before <= 1e-12 * std::max(value, 1e-300)) break;
  }
  // After the last slot update |T(x)| equals that slot's sum of magnitudes.
  run.value = value;
  run.point.resize(m);
  for (std::size_t s = 0; s < m; ++s) run.point[s].assign(x[s].begin(), x[s].end());
  return run;
}

}  // namespace

NormResult ascent_lower_bound(const MultilinearForm& form, const AscentOptions& options) {
  const unsigned restarts = std::max(1u, options.restarts);
  std::vector<AscentRun> runs(restarts);
  parallel_for(restarts, options.threads, [&](std::size_t r) {
    const std::uint64_t seed = split_seed(options.seed, r);
    runs[r] = form.field() == Field::real ? ascend_form<double>(form, seed, options.max_rounds)
                                          : ascend_form<std::complex<double>>(form, seed, options.max_rounds);
  });
  std::size_t best = 0;
  NormResult result;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    result.work += runs[r].work;
    if (runs[r].value > runs[best].value) best = r;
  }
  result.value = runs[best].value;
  result.witness = std::move(runs[best].point);
  result.bound = Bound::lower_bound;
  return result;
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

// Horner evaluation of sum_d a[d] t^d.
template <typename T>
T horner(const std::vector<T>& a, T t) {
  T r{};
  for (std::size_t d = a.size(); d-- > 0;) r = r * t + a[d];
  return r;
}

std::vector<double> derivative(const std::vector<double>& a) {
  std::vector<double> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<double>(i) * a[i]);
  return d;
}

// Real roots of sum_d a[d] t^d inside [lo, hi]. Roots of the derivative split
// the interval into monotone pieces; each sign change is bisected.
std::vector<double> real_roots(std::vector<double> a, double lo, double hi) {
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  if (a.size() <= 1) return {};
  if (a.size() == 2) {
    const double r = -a[0] / a[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  std::vector<double> breaks{lo};
  for (double c : real_roots(derivative(a), lo, hi)) breaks.push_back(c);
  breaks.push_back(hi);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double l = breaks[i];
    double h = breaks[i + 1];
    double fl = horner(a, l);
    const double fh = horner(a, h);
    if (fl == 0.0) {
      roots.push_back(l);
      continue;
    }
    if ((fl < 0.0) == (fh < 0.0)) continue;
    for (int it = 0; it < 200 && h - l > 1e-15; ++it) {
      const double mid = 0.5 * (l + h);
      const double fm = horner(a, mid);
      if ((fm < 0.0) == (fl < 0.0)) {
        l = mid;
        fl = fm;
      } else {
        h = mid;
      }
    }
    roots.push_back(0.5 * (l + h));
  }
  if (horner(a, hi) == 0.0) roots.push_back(hi);
  return roots;
}

// Coefficients in x_var of the polynomial with every other coordinate fixed.
template <typename T>
std::vector<T> restrict_to(const std::vector<std::pair<MultiIndex, T>>& terms, const std::vector<T>& x,
                           std::uint32_t var) {
  std::vector<T> a;
  for (const auto& [alpha, c] : terms) {
    T prod = c;
    std::uint32_t d = 0;
    for (const auto& [v, e] : alpha.entries()) {
      if (v == var) {
        d = e;
        continue;
      }
      for (std::uint32_t k = 0; k < e; ++k) prod *= x[v - 1];
    }
    if (a.size() <= d) a.resize(d + 1, T{});
    a[d] += prod;
  }
  return a;
}

template <typename T>
double poly_abs(const std::vector<std::pair<MultiIndex, T>>& terms, const std::vector<T>& x) {
  T total{};
  for (const auto& [alpha, c] : terms) {
    T prod = c;
    for (const auto& [v, e] : alpha.entries()) {
      for (std::uint32_t k = 0; k < e; ++k) prod *= x[v - 1];
    }
    total += prod;
  }
  return std::abs(total);
}

AscentRun ascend_real_poly(const HomogeneousPolynomial& poly, const std::vector<std::uint32_t>& vars,
                           std::uint64_t seed, unsigned max_rounds) {
  std::vector<std::pair<MultiIndex, double>> terms;
  for (const auto& [alpha, c] : poly.coeffs()) terms.emplace_back(alpha, c.re());
  SplitMix64 rng(seed);
  std::vector<double> x(poly.dimension(), 1.0);
  for (std::uint32_t v : vars) x[v - 1] = rng.uniform(-1.0, 1.0);
  AscentRun run;
  double value = poly_abs(terms, x);
  for (unsigned round = 0; round < max_rounds; ++round) {
    const double before = value;
    for (std::uint32_t v : vars) {
      const auto a = restrict_to(terms, x, v);
      double best_t = x[v - 1];
      double best = std::abs(horner(a, best_t));
      std::vector<double> candidates{-1.0, 1.0};
      for (double c : real_roots(derivative(a), -1.0, 1.0)) candidates.push_back(c);
      for (double t : candidates) {
        const double val = std::abs(horner(a, t));
        if (val > best) {
          best = val;
          best_t = t;
        }
      }
      x[v - 1] = best_t;
      value = std::max(value, best);
      ++run.work;
    }
    if (round > 0 && value - before <= 1e-12 * std::max(value, 1e-300)) break;
  }
  // Report the value at the final point so the witness reproduces it.
  run.value = poly_abs(terms, x);
  run.point = {ComplexVector(x.begin(), x.end())};
  return run;
}

AscentRun ascend_complex_poly(const HomogeneousPolynomial& poly, const std::vector<std::uint32_t>& vars,
                              std::uint64_t seed, unsigned max_rounds) {
  using C = std::complex<double>;
  constexpr int kPhases = 16;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::pair<MultiIndex, C>> terms;
  for (const auto& [alpha, c] : poly.coeffs()) terms.emplace_back(alpha, c.value());
  SplitMix64 rng(seed);
  std::vector<C> x(poly.dimension(), C(1.0, 0.0));
  for (std::uint32_t v : vars) x[v - 1] = std::polar(1.0, rng.uniform(0.0, two_pi));
  AscentRun run;
  double value = poly_abs(terms, x);
  for (unsigned round = 0; round < max_rounds; ++round) {
    const double before = value;
    for (std::uint32_t v : vars) {
      const auto a = restrict_to(terms, x, v);
      auto at = [&](double phi) { return std::abs(horner(a, std::polar(1.0, phi))); };
      // |q| on the disk peaks on the circle.
      double best_phi = std::arg(x[v - 1]);
      double best = at(best_phi);
      double grid_phi = 0.0;
      double grid_best = -1.0;
      for (int k = 0; k < kPhases; ++k) {
        const double phi = two_pi * k / kPhases;
        const double val = at(phi);
        if (val > grid_best) {
          grid_best = val;
          grid_phi = phi;
        }
      }
      // Golden-section refinement around the best grid phase.
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double lo = grid_phi - two_pi / kPhases;
      double hi = grid_phi + two_pi / kPhases;
      double c1 = hi - g * (hi - lo);
      double c2 = lo + g * (hi - lo);
      double f1 = at(c1);
      double f2 = at(c2);
      for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
          lo = c1;
          c1 = c2;
          f1 = f2;
          c2 = lo + g * (hi - lo);
          f2 = at(c2);
        } else {
          hi = c2;
          c2 = c1;
          f2 = f1;
          c1 = hi - g * (hi - lo);
          f1 = at(c1);
        }
      }
      for (auto [phi, val] : {std::pair{grid_phi, grid_best}, std::pair{c1, f1}, std::pair{c2, f2}}) {
        if (val > best) {
          best = val;
          best_phi = phi;
        }
      }
      x[v - 1] = std::polar(1.0, best_phi);
      value = std::max(value, best);
      ++run.work;
    }
    if (round > 0 && value - before <= 1e-12 * std::max(value, 1e-300)) break;
  }
  run.value = poly_abs(terms, x);
  run.point = {ComplexVector(x.begin(), x.end())};
  return run;
}

// Exact max of |P| over the cube for real multiaffine P. P(-x) = (-1)^m P(x),
// so the first active variable is pinned to +1.
NormResult multiaffine_vertex_norm(const HomogeneousPolynomial& poly, const std::vector<std::uint32_t>& vars) {
  const std::size_t bits = vars.size();
  std::vector<std::uint32_t> pos(poly.dimension() + 1, 0);
  for (std::size_t i = 0; i < bits; ++i) pos[vars[i]] = static_cast<std::uint32_t>(i);
  struct PTerm {
    std::vector<std::uint32_t> vars;
    double coeff;
    std::int64_t icoeff;
  };
  const bool integer = poly.integer_coefficients();
  std::vector<PTerm> terms;
  for (const auto& [alpha, c] : poly.coeffs()) {
    PTerm t{{}, c.re(), integer ? *c.exact_integer() : 0};
    for (const auto& [v, e] : alpha.entries()) t.vars.push_back(pos[v]);
    terms.push_back(std::move(t));
  }
  const std::uint64_t count = bits == 0 ? 1 : std::uint64_t{1} << (bits - 1);
  std::vector<std::int8_t> sign(bits, 1);
  double best = -1.0;
  std::int64_t ibest = -1;
  std::uint64_t best_code = 0;
  for (std::uint64_t free = 0; free < count; ++free) {
    const std::uint64_t code = bits == 0 ? 0 : ((std::uint64_t{1} << (bits - 1)) | free);
    for (std::size_t i = 0; i < bits; ++i) sign[i] = (code >> (bits - 1 - i)) & 1u ? 1 : -1;
    if (integer) {
      std::int64_t total = 0;
      for (const auto& t : terms) {
        std::int64_t s = 1;
        for (std::uint32_t v : t.vars) s *= sign[v];
        total += s * t.icoeff;
      }
      if (total < 0) total = -total;
      if (total > ibest) {
        ibest = total;
        best = static_cast<double>(total);
        best_code = code;
      }
    } else {
      double total = 0.0;
      for (const auto& t : terms) {
        double s = 1.0;
        for (std::uint32_t v : t.vars) s *= sign[v];
        total += s * t.coeff;
      }
      if (std::abs(total) > best) {
        best = std::abs(total);
        best_code = code;
      }
    }
  }
  NormResult result;
  result.bound = Bound::exact;
  result.value = std::max(best, 0.0);
  if (integer) result.exact_value = std::max<std::int64_t>(ibest, 0);
  result.work = count;
  ComplexVector w(poly.dimension(), 1.0);
  for (std::size_t i = 0; i < bits; ++i) w[vars[i] - 1] = (best_code >> (bits - 1 - i)) & 1u ? 1.0 : -1.0;
  result.witness = {std::move(w)};
  return result;
}

}  // namespace

NormResult poly_lower_bound(const HomogeneousPolynomial& poly, const AscentOptions& options,
                            const NormOptions& exact_options) {
  const auto vars = poly.active_variables();
  if (poly.field() == Field::real && poly.multiaffine()) {
    const std::uint64_t need = vars.empty() ? 1 : (vars.size() > 63 ? ~std::uint64_t{0} : std::uint64_t{1} << (vars.size() - 1));
    if (need <= exact_options.budget) return multiaffine_vertex_norm(poly, vars);
  }
  const unsigned restarts = std::max(1u, options.restarts);
  std::vector<AscentRun> runs(restarts);
  parallel_for(restarts, options.threads, [&](std::size_t r) {
    const std::uint64_t seed = split_seed(options.seed, r);
    runs[r] = poly.field() == Field::real ? ascend_real_poly(poly, vars, seed, options.max_rounds)
                                          : ascend_complex_poly(poly, vars, seed, options.max_rounds);
  });
  std::size_t best = 0;
  NormResult result;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    result.work += runs[r].work;
    if (runs[r].value > runs[best].value) best = r;
  }
  result.value = runs[best].value;
  result.witness = std::move(runs[best].point);
  result.bound = Bound::lower_bound;
  return result;
}

}  // namespace bhlab
