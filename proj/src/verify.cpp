#include "bhlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhlab/constructions.hpp"
#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/search.hpp"
#include "bhlab/sums.hpp"

namespace bhlab {

bool outcome_passes(double computed, double expected, double tolerance) {
  return std::abs(computed - expected) <= tolerance * std::max(1.0, std::abs(expected));
}

VerifyOutcome make_outcome(int criterion, std::string name, double expected, std::string provenance,
                           double computed, double tolerance) {
  VerifyOutcome o;
  o.criterion = criterion;
  o.name = std::move(name);
  o.expected = expected;
  o.provenance = std::move(provenance);
  o.computed = computed;
  o.tolerance = tolerance;
  o.pass = outcome_passes(computed, expected, tolerance);
  return o;
}

namespace {

// Seeded small real form: m in 1..max_m, dims in 1..max_dim, mixed
// coefficient distributions (half of them +-1).
MultilinearForm small_form(std::uint64_t seed, int min_m, int max_m, int max_dim) {
  SplitMix64 rng(seed);
  const int m = min_m + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m - min_m + 1)));
  std::vector<std::size_t> dims(static_cast<std::size_t>(m));
  for (auto& d : dims) d = 1 + rng.below(static_cast<std::uint64_t>(max_dim));
  const double density = 0.3 + 0.7 * rng.uniform();
  const auto pick = rng.below(4);
  const CoeffDist dist = pick < 2 ? CoeffDist::pm1 : pick == 2 ? CoeffDist::uniform : CoeffDist::gaussian;
  // Tiny sparse draws can come up empty; keep drawing from the same stream.
  for (;;) {
    try {
      return random_sparse(m, dims, density, dist, rng.next());
    } catch (const DomainError&) {
    }
  }
}

MultilinearForm small_form_of_arity(std::uint64_t seed, int m, int max_dim) {
  return small_form(seed, m, m, max_dim);
}

constexpr std::uint64_t kSeedOracle = 0x4f52;
constexpr std::uint64_t kSeedKhinchin = 0x4b48;
constexpr std::uint64_t kSeedInterp = 0x4950;
constexpr std::uint64_t kSeedBound = 0x5542;
constexpr std::uint64_t kSeedSym = 0x5359;
constexpr std::uint64_t kSeedLift = 0x4c46;
constexpr std::uint64_t kSeedKsz = 1;
constexpr std::uint64_t kSeedSearch = 7;

}  // namespace

std::vector<VerifyOutcome> run_verify_suite(const VerifyOptions& options) {
  const unsigned threads = options.deterministic ? 1u : options.threads;
  const bool quick = options.suite == "quick";
  NormOptions norm;
  norm.threads = threads;
  std::vector<VerifyOutcome> out;

  // 1. S_m family.
  for (int m = 2; m <= 5; ++m) {
    const auto s = s_family(m);
    const NormResult n = exact_norm_real(s, norm);
    const std::string tag = "S" + std::to_string(m);
    out.push_back(make_outcome(1, tag + " norm", std::ldexp(1.0, m - 1), "closed form 2^(m-1)",
                               n.exact_value ? static_cast<double>(*n.exact_value) : -1.0, 0.0));
    const double p = bh_exponent(m);
    out.push_back(make_outcome(1, tag + " bh sum", std::pow(2.0, (m - 1.0) * (m + 1.0) / m),
                               "closed form 2^((m-1)(m+1)/m)", lp_sum(coefficient_magnitudes(s), p), 1e-9));
    NormMethod method;
    method.exact = norm;
    out.push_back(make_outcome(1, tag + " ratio", std::pow(2.0, (m - 1.0) / m), "closed form 2^((m-1)/m)",
                               ratio_report(s, p, Restriction::full(), method).ratio, 1e-9));
  }

  // 2. R_m and A_m families.
  for (int m : {2, 4, 6}) {
    const auto r = r_family(m);
    const NormResult n = exact_norm_real(r, norm);
    const std::string tag = "R" + std::to_string(m);
    out.push_back(make_outcome(2, tag + " norm", std::ldexp(1.0, m / 2), "closed form 2^(m/2)",
                               n.exact_value ? static_cast<double>(*n.exact_value) : -1.0, 0.0));
    out.push_back(make_outcome(2, tag + " monomials", std::ldexp(1.0, m), "closed form 4^(m/2)",
                               static_cast<double>(r.size()), 0.0));
    NormMethod method;
    method.exact = norm;
    out.push_back(make_outcome(2, tag + " ratio", std::sqrt(2.0), "closed form sqrt(2)",
                               ratio_report(r, bh_exponent(m), Restriction::card_leq(2), method).ratio, 1e-9));
  }
  for (int m : {3, 5}) {
    const auto a = a_family(m);
    const NormResult n = exact_norm_real(a, norm);
    const std::string tag = "A" + std::to_string(m);
    out.push_back(make_outcome(2, tag + " norm", std::ldexp(1.0, (m - 1) / 2), "closed form 2^((m-1)/2)",
                               n.exact_value ? static_cast<double>(*n.exact_value) : -1.0, 0.0));
    out.push_back(make_outcome(2, tag + " monomials", std::ldexp(1.0, m - 1), "closed form 4^((m-1)/2)",
                               static_cast<double>(a.size()), 0.0));
    NormMethod method;
    method.exact = norm;
    out.push_back(make_outcome(2, tag + " ratio", std::pow(2.0, (m - 1.0) / (2.0 * m)),
                               "closed form 2^((m-1)/(2m))",
                               ratio_report(a, bh_exponent(m), Restriction::card_leq(2), method).ratio, 1e-9));
  }

  // 3. Littlewood witness.
  {
    NormMethod method;
    method.exact = norm;
    out.push_back(make_outcome(3, "S2 ratio at p=4/3", std::sqrt(2.0), "closed form sqrt(2)",
                               ratio_report(littlewood_s2(), 4.0 / 3.0, Restriction::full(), method).ratio, 1e-9));
  }

  // 4. Elimination engine against full enumeration.
  {
    int mismatches = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
      const auto form = small_form(split_seed(kSeedOracle, i), 1, 3, 3);
      const NormResult fast = exact_norm_real(form, norm);
      const double slow = brute_force_norm_real(form);
      const bool ok = form.integer_coefficients() ? fast.value == slow
                                                  : std::abs(fast.value - slow) <= 1e-9 * std::max(1.0, slow);
      if (!ok) ++mismatches;
    }
    out.push_back(make_outcome(4, "exact vs brute-force mismatches (100 forms)", 0, "brute-force vertex oracle",
                               mismatches, 0.0));
  }

  // 5. l2 of coefficients <= norm.
  {
    int violations = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto form = small_form(split_seed(kSeedKhinchin, i), 1, 3, 3);
      const NormResult n = exact_norm_real(form, norm);
      if (form.integer_coefficients() && n.exact_value) {
        std::int64_t squares = 0;
        for (const auto& [t, c] : form.coeffs()) squares += *c.exact_integer() * *c.exact_integer();
        if (squares > *n.exact_value * *n.exact_value) ++violations;
      } else if (lp_sum(coefficient_magnitudes(form), 2.0) > n.value * (1.0 + 1e-12)) {
        ++violations;
      }
    }
    out.push_back(make_outcome(5, "l2 <= norm violations (200 forms)", 0, "Khinchin-type lemma", violations, 0.0));
  }

  // 6. Interpolation exponent algebra and the Holder bound.
  {
    int algebra_mismatches = 0;
    for (int m = 1; m <= 12; ++m) {
      for (int M = 1; M <= m; ++M) {
        const Rational p = interpolated_exponent(bh_exponent_exact(M), Rational(2), Rational(M, m));
        if (!(p == bh_exponent_exact(m))) ++algebra_mismatches;
      }
    }
    out.push_back(make_outcome(6, "exponent algebra mismatches (1<=M<=m<=12)", 0, "exact rational identity",
                               algebra_mismatches, 0.0));
    int violations = 0;
    SplitMix64 rng(kSeedInterp);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t size = 1 + rng.below(200);
      std::vector<double> a(size);
      for (double& x : a) x = std::pow(10.0, rng.uniform(-8.0, 8.0)) * (rng.sign());
      const int m = 1 + static_cast<int>(rng.below(12));
      const int M = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
      const auto r = interpolation_bound(a, bh_exponent(M), 2.0, static_cast<double>(M) / m);
      if (!r.holds) ++violations;
    }
    out.push_back(make_outcome(6, "interpolation bound violations (1000 vectors)", 0, "Holder inequality",
                               violations, 0.0));
  }

  // 7. Restricted ratios stay under the explicit upper bound.
  {
    int violations = 0;
    NormMethod method;
    method.exact = norm;
    auto check = [&](const MultilinearForm& f, int M) {
      const int m = static_cast<int>(f.arity());
      const auto rep = ratio_report(f, bh_exponent(m), Restriction::card_leq(M), method);
      if (!(rep.ratio <= theorem_upper_bound(m, M))) ++violations;
    };
    for (int m : {3, 4, 5}) check(s_family(m), 3);
    for (int m : {2, 4, 6}) check(r_family(m), 2);
    for (int m : {3, 5}) check(a_family(m), 2);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const bool first = i < 50;
      check(small_form_of_arity(split_seed(kSeedBound, i), first ? 3 : 4, 3), first ? 2 : 3);
    }
    out.push_back(make_outcome(7, "restricted ratio > upper bound (108 forms)", 0, "explicit restricted-sum bound",
                               violations, 0.0));
  }

  // 8. Symmetrization chain.
  {
    int multiset = 0, norms = 0, sums = 0, poly = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const auto form = small_form(split_seed(kSeedSym, i), 1, 3, 3);
      const auto [t1, emb] = disjointify(form);
      auto a = coefficient_magnitudes(form);
      auto b = coefficient_magnitudes(t1);
      std::vector<double> sa, sb;
      for (const auto& [t, c] : form.coeffs()) sa.push_back(c.re());
      for (const auto& [t, c] : t1.coeffs()) sb.push_back(c.re());
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) ++multiset;
      const NormResult nt = exact_norm_real(form, norm);
      const NormResult n1 = exact_norm_real(t1, norm);
      if (nt.value != n1.value) ++norms;
      const auto p = diagonal_polynomial(t1);
      const double m = static_cast<double>(form.arity());
      const double q = 2.0 * m / (m + 1.0);
      const double st = lp_sum(a, q);
      const double sp = lp_sum(coefficient_magnitudes(p), q);
      if (std::abs(st - sp) > 1e-12 * std::max(1.0, st)) ++sums;
      AscentOptions ao;
      ao.seed = i;
      const NormResult np = poly_lower_bound(p, ao, norm);
      if (np.value > nt.value + 1e-9) ++poly;
    }
    out.push_back(make_outcome(8, "T1 coefficient multiset mismatches (50 forms)", 0, "re-indexing only", multiset, 0.0));
    out.push_back(make_outcome(8, "||T1|| != ||T|| (50 forms)", 0, "re-indexing only", norms, 0.0));
    out.push_back(make_outcome(8, "bh sum of P != bh sum of T (50 forms)", 0, "collision-free diagonal", sums, 0.0));
    out.push_back(make_outcome(8, "||P|| lower bound > ||T|| (50 forms)", 0, "||P|| <= ||T1|| = ||T||", poly, 0.0));
  }

  // 9. Monomial lift.
  {
    int bijection = 0, omega_bad = 0, pointwise = 0;
    SplitMix64 rng(kSeedLift);
    for (int i = 0; i < 50; ++i) {
      const int degree = 1 + static_cast<int>(rng.below(2));
      const int M = degree + 1;
      const int m = M + static_cast<int>(rng.below(4));
      const Field f = rng.below(2) ? Field::complex : Field::real;
      // Square-free monomials over variables 2..6.
      HomogeneousPolynomial::Coeffs coeffs;
      for (std::uint32_t a = 2; a <= 6; ++a) {
        for (std::uint32_t b = (degree == 1 ? a : a + 1); b <= 6; ++b) {
          if (rng.uniform() < 0.5) continue;
          std::vector<MultiIndex::Entry> e{{a, 1}};
          if (degree == 2) e.emplace_back(b, 1);
          const Scalar c = f == Field::real ? Scalar::real(rng.uniform(-2.0, 2.0))
                                            : Scalar::complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
          coeffs.emplace(MultiIndex(std::move(e)), c);
          if (degree == 1) break;
        }
      }
      if (coeffs.empty()) coeffs.emplace(MultiIndex({{2, 1}}).shifted(3, degree - 1), Scalar::integer(1));
      const HomogeneousPolynomial p(static_cast<std::uint32_t>(degree), 6, f, std::move(coeffs));
      const auto lifted = lift_polynomial(p, M, m);
      bool ok = lifted.size() == p.size();
      for (const auto& [alpha, c] : p.coeffs()) {
        ok = ok && lifted.coefficient(alpha.shifted(1, static_cast<std::uint32_t>(m - M + 1))) == c;
      }
      if (!ok) ++bijection;
      for (const auto& [alpha, c] : lifted.coeffs()) {
        if (alpha.omega() > static_cast<std::size_t>(M)) ++omega_bad;
      }
      for (int k = 0; k < 100; ++k) {
        ComplexVector x(6);
        for (auto& z : x) {
          z = f == Field::real ? std::complex<double>(rng.uniform(-1.0, 1.0))
                               : std::polar(std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * std::numbers::pi));
        }
        const double lp = evaluate_poly(lifted, std::span<const std::complex<double>>(x)).abs();
        const double pp = evaluate_poly(p, std::span<const std::complex<double>>(x)).abs();
        if (lp > pp * (1.0 + 1e-12) + 1e-300) ++pointwise;
      }
    }
    out.push_back(make_outcome(9, "lift coefficient bijection failures (50 polys)", 0, "x1-power shift", bijection, 0.0));
    out.push_back(make_outcome(9, "lifted monomials with omega > M", 0, "x1-power shift", omega_bad, 0.0));
    out.push_back(make_outcome(9, "|lift(P)(x)| > |P(x)| (5000 points)", 0, "|x1| <= 1", pointwise, 0.0));
  }

  // 10. KSZ scaling.
  if (!quick) {
    KszOptions ko;
    ko.threads = threads;
    const auto table = ksz_scaling_experiment(2, {4, 8, 16}, 50, kSeedKsz, ko);
    const double slope = table.summary["slope"].get<double>();
    out.push_back(make_outcome(10, "KSZ m=2 log2-median slope", 1.5, "(m+1)/2, statistical band +-0.15", slope,
                               0.1));
  }

  // 11. Search recovers the Littlewood witness.
  {
    SearchConfig cfg;
    cfg.m = 2;
    cfg.dims = {2, 2};
    cfg.p = 4.0 / 3.0;
    cfg.budget = 10000;
    cfg.seed = kSeedSearch;
    cfg.threads = threads;
    const auto res = maximize_ratio(cfg);
    out.push_back(make_outcome(11, "search best ratio m=2 dims 2x2", std::sqrt(2.0), "Littlewood sharp constant",
                               res.report.ratio, 1e-9));
  }

  // 12. Thread count does not change values or witnesses.
  {
    int differences = 0;
    NormOptions many = norm;
    many.threads = 8;
    NormOptions one = norm;
    one.threads = 1;
    std::vector<MultilinearForm> forms{s_family(5), r_family(6), ksz_random(2, quick ? 8 : 12, 3)};
    for (std::uint64_t i = 0; i < 10; ++i) forms.push_back(small_form(split_seed(0x4454, i), 2, 3, 3));
    for (const auto& f : forms) {
      const auto a = exact_norm_real(f, one);
      const auto b = exact_norm_real(f, many);
      if (a.value != b.value || a.witness != b.witness) ++differences;
    }
    out.push_back(make_outcome(12, "1 vs 8 thread norm/witness differences", 0, "deterministic reduction",
                               differences, 0.0));
  }
  return out;
}

Json to_json(const VerifyOutcome& o) {
  Json j;
  j["criterion"] = o.criterion;
  j["name"] = o.name;
  j["expected"] = o.expected;
  j["provenance"] = o.provenance;
  j["computed"] = o.computed;
  j["tolerance"] = o.tolerance;
  j["pass"] = o.pass;
  return j;
}

Json to_json(const std::vector<VerifyOutcome>& outcomes) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& o : outcomes) {
    arr.push_back(to_json(o));
    all = all && o.pass;
  }
  Json j;
  j["pass"] = all;
  j["outcomes"] = std::move(arr);
  return j;
}

std::string to_csv(const std::vector<VerifyOutcome>& outcomes) {
  std::string s = "criterion,name,expected,computed,tolerance,pass,provenance\n";
  for (const auto& o : outcomes) {
    s += std::to_string(o.criterion) + ",\"" + o.name + "\"," + format_double(o.expected) + "," +
         format_double(o.computed) + "," + format_double(o.tolerance) + "," + (o.pass ? "true" : "false") + ",\"" +
         o.provenance + "\"\n";
  }
  return s;
}

}  // namespace bhlab
