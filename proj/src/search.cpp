#include "bhlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/parallel.hpp"
#include "bhlab/rng.hpp"

namespace bhlab {

namespace {

// Dense sign tensor over `dims` in lexicographic tuple order.
struct SignTensor {
  std::vector<std::size_t> dims;
  std::vector<IndexTuple> tuples;
  std::vector<std::int64_t> values;

  explicit SignTensor(std::vector<std::size_t> d) : dims(std::move(d)) {
    IndexTuple t(dims.size(), 1);
    while (true) {
      tuples.push_back(t);
      std::size_t j = t.size();
      while (j-- > 0) {
        if (t[j] < dims[j]) {
          ++t[j];
          break;
        }
        t[j] = 1;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
    values.assign(tuples.size(), 0);
  }

  MultilinearForm form() const {
    MultilinearForm::Coeffs coeffs;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (values[i] != 0) coeffs.emplace_hint(coeffs.end(), tuples[i], Scalar::integer(values[i]));
    }
    return MultilinearForm(dims, Field::real, std::move(coeffs));
  }
};

double evaluate_ratio(const MultilinearForm& form, double p, const Restriction& restriction,
                      const NormOptions& norm) {
  if (form.empty()) return 0.0;
  const double sum = restriction.kind == Restriction::Kind::full
                         ? lp_sum(coefficient_magnitudes(form), p)
                         : restricted_sum(form, restriction.M, p);
  const NormResult n = exact_norm_real(form, norm);
  return n.value > 0.0 ? sum / n.value : 0.0;
}

struct RestartOutcome {
  std::vector<std::int64_t> values;
  double ratio = -1.0;
  std::uint64_t evaluations = 0;
};

}  // namespace

SearchResult maximize_ratio(const SearchConfig& config) {
  if (config.m < 1 || config.dims.size() != static_cast<std::size_t>(config.m)) {
    throw DomainError("search needs m slot dimensions");
  }
  if (config.restriction.kind != Restriction::Kind::full && config.restriction.kind != Restriction::Kind::card_leq) {
    throw DomainError("search supports the full and card restrictions");
  }
  const unsigned restarts = std::max(1u, config.restarts);
  if (config.budget < restarts) {
    throw BudgetError(restarts, config.budget, "search budget cannot cover one evaluation per restart");
  }
  const double p = config.p > 0.0 ? config.p : bh_exponent(config.m);
  const SignTensor shape(config.dims);
  if (config.start) {
    if (config.start->field() != Field::real || !config.start->integer_coefficients() ||
        config.start->arity() != config.dims.size()) {
      throw DomainError("search start must be a real integer form of arity m");
    }
    for (std::size_t s = 0; s < config.dims.size(); ++s) {
      if (config.start->dims()[s] > config.dims[s]) throw DomainError("search start does not fit inside dims");
    }
  }
  // Fail early if a single candidate is beyond the norm budget.
  {
    SignTensor probe = shape;
    std::fill(probe.values.begin(), probe.values.end(), 1);
    const std::uint64_t work = exact_norm_work(probe.form());
    if (work > config.norm.budget) throw BudgetError(work, config.norm.budget, "candidate norm exceeds budget");
  }

  const std::uint64_t share = config.budget / restarts;
  std::vector<RestartOutcome> outcomes(restarts);
  parallel_for(restarts, config.threads, [&](std::size_t r) {
    SignTensor x = shape;
    if (r == 0 && config.start) {
      for (std::size_t i = 0; i < x.tuples.size(); ++i) {
        const IndexTuple& t = x.tuples[i];
        bool inside = true;
        for (std::size_t s = 0; s < t.size(); ++s) inside = inside && t[s] <= config.start->dims()[s];
        if (inside) x.values[i] = *config.start->coefficient(t).exact_integer();
      }
    } else {
      SplitMix64 rng(split_seed(config.seed, r));
      for (auto& v : x.values) v = rng.sign();
    }
    RestartOutcome& out = outcomes[r];
    double incumbent = evaluate_ratio(x.form(), p, config.restriction, config.norm);
    out.evaluations = 1;
    bool improved = true;
    while (improved && out.evaluations < share) {
      improved = false;
      double best = incumbent;
      std::size_t best_flip = 0;
      for (std::size_t i = 0; i < x.values.size() && out.evaluations < share; ++i) {
        if (x.values[i] == 0) continue;
        x.values[i] = -x.values[i];
        const double ratio = evaluate_ratio(x.form(), p, config.restriction, config.norm);
        x.values[i] = -x.values[i];
        ++out.evaluations;
        if (ratio > best) {
          best = ratio;
          best_flip = i;
          improved = true;
        }
      }
      if (improved) {
        x.values[best_flip] = -x.values[best_flip];
        incumbent = best;
      }
    }
    out.ratio = incumbent;
    out.values = std::move(x.values);
  });

  unsigned best = 0;
  std::uint64_t evaluations = 0;
  for (unsigned r = 0; r < restarts; ++r) {
    evaluations += outcomes[r].evaluations;
    if (outcomes[r].ratio > outcomes[best].ratio) best = r;
  }
  SignTensor winner = shape;
  winner.values = outcomes[best].values;
  MultilinearForm form = winner.form();
  NormMethod method;
  method.exact = config.norm;
  RatioReport report = ratio_report(form, p, config.restriction, method);
  return SearchResult{std::move(form), std::move(report), evaluations, best};
}

// ---------------------------------------------------------------------------

Json ExperimentTable::to_json() const {
  Json j;
  j["name"] = name;
  j["metadata"] = metadata;
  j["summary"] = summary;
  j["columns"] = columns;
  Json rs = Json::array();
  for (const auto& row : rows) {
    Json obj;
    for (std::size_t c = 0; c < columns.size() && c < row.size(); ++c) obj[columns[c]] = row[c];
    rs.push_back(std::move(obj));
  }
  j["rows"] = std::move(rs);
  return j;
}

std::string ExperimentTable::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      const Json& v = row[c];
      if (v.is_string()) {
        out += v.get<std::string>();
      } else if (v.is_number_float()) {
        out += format_double(v.get<double>());
      } else {
        out += v.dump();
      }
    }
    out += '\n';
  }
  return out;
}

std::string content_hash(const Json& value) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : value.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json config_json(const SearchConfig& c) {
  Json j;
  j["m"] = c.m;
  j["dims"] = c.dims;
  j["p"] = c.p;
  j["restriction"] = bhlab::to_json(c.restriction);
  j["budget"] = c.budget;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["norm_budget"] = c.norm.budget;
  return j;
}

}  // namespace

ExperimentTable constant_table(const std::vector<int>& ms, const std::vector<int>& Ms, const SearchConfig& defaults) {
  ExperimentTable table;
  table.name = "constant_table";
  table.columns = {"m", "M", "p", "dims", "best_ratio", "exact_norm", "upper_bound", "evaluations", "seed"};
  Json cfg = config_json(defaults);
  cfg["ms"] = ms;
  cfg["Ms"] = Ms;
  table.metadata["seed"] = defaults.seed;
  table.metadata["config_hash"] = content_hash(cfg);
  table.metadata["note"] = "empirical lower bounds for the card-restricted constants";
  for (int m : ms) {
    for (int M : Ms) {
      if (M < 1 || M > m) continue;
      SearchConfig cfg_cell = defaults;
      cfg_cell.m = m;
      cfg_cell.dims.assign(static_cast<std::size_t>(m), 2);
      if (m >= 2) cfg_cell.dims[0] = std::size_t{1} << (m - 1);
      cfg_cell.p = bh_exponent(m);
      cfg_cell.restriction = M == m ? Restriction::full() : Restriction::card_leq(M);
      cfg_cell.start.reset();
      if (m >= 2 && M >= 3) {
        cfg_cell.start = s_family(m);
      } else if (m >= 2 && M == 2) {
        cfg_cell.start = m % 2 == 0 ? r_family(m) : a_family(m);
      }
      const SearchResult res = maximize_ratio(cfg_cell);
      Json dims = cfg_cell.dims;
      std::string dims_text;
      for (std::size_t i = 0; i < cfg_cell.dims.size(); ++i) {
        if (i) dims_text += 'x';
        dims_text += std::to_string(cfg_cell.dims[i]);
      }
      table.rows.push_back({m, M, cfg_cell.p, dims_text, res.report.ratio, res.report.norm.exact(),
                            theorem_upper_bound(m, M), res.evaluations, defaults.seed});
    }
  }
  return table;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

ExperimentTable ksz_scaling_experiment(int m, const std::vector<int>& ns, unsigned samples, std::uint64_t seed,
                                       const KszOptions& options) {
  if (m < 1) throw DomainError("ksz_scaling_experiment needs m >= 1");
  if (samples == 0) throw DomainError("ksz_scaling_experiment needs samples >= 1");
  for (int n : ns) {
    if (n < 1) throw DomainError("ksz_scaling_experiment needs n >= 1");
    // The norm engine eliminates one slot and enumerates (m-1) n signs.
    const std::size_t bits = static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(n);
    const std::uint64_t work = bits == 0 ? 1 : bits > 63 ? std::numeric_limits<std::uint64_t>::max()
                                                         : std::uint64_t{1} << (bits - 1);
    if (work > options.norm.budget) {
      throw BudgetError(work, options.norm.budget, "exact norm infeasible for n = " + std::to_string(n));
    }
  }

  ExperimentTable table;
  table.name = "ksz_scaling";
  table.columns = {"n", "samples", "median_norm", "median_stat", "min_stat", "exponent"};
  Json cfg;
  cfg["m"] = m;
  cfg["ns"] = ns;
  cfg["samples"] = samples;
  cfg["seed"] = seed;
  table.metadata["seed"] = seed;
  table.metadata["config_hash"] = content_hash(cfg);

  const double exponent = (m + 1) / 2.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n : ns) {
    std::vector<double> norms(samples);
    const std::uint64_t n_seed = split_seed(seed, static_cast<std::uint64_t>(n));
    parallel_for(samples, options.threads, [&](std::size_t s) {
      const MultilinearForm form = ksz_random(m, n, split_seed(n_seed, s));
      NormOptions no = options.norm;
      no.threads = 1;
      norms[s] = exact_norm_real(form, no).value;
    });
    const double scale = std::pow(static_cast<double>(n), exponent);
    std::vector<double> stats;
    for (double v : norms) stats.push_back(v / scale);
    const double med_norm = median(norms);
    table.rows.push_back({n, samples, med_norm, median(stats), *std::min_element(stats.begin(), stats.end()),
                          exponent});
    xs.push_back(std::log2(static_cast<double>(n)));
    ys.push_back(std::log2(med_norm));
  }

  if (xs.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    table.summary["slope"] = sxx > 0.0 ? Json(sxy / sxx) : Json(nullptr);
  } else {
    table.summary["slope"] = nullptr;
  }
  table.summary["theory_slope"] = exponent;
  return table;
}

}  // namespace bhlab
