#include "bhlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "bhlab/constructions.hpp"
#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/io.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/search.hpp"
#include "bhlab/sums.hpp"
#include "bhlab/verify.hpp"

namespace bhlab::cli {

namespace {

// Thrown for semantic usage problems found after parsing (exit code 2).
struct UsageError : Error {
  using Error::Error;
};

Restriction parse_restriction(const std::string& text) {
  if (text.empty() || text == "full") return Restriction::full();
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("restriction must be full, card:M, omega:M or block:n1,n2,..");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    if (kind == "card") return Restriction::card_leq(std::stoi(rest));
    if (kind == "omega") return Restriction::omega_leq(std::stoi(rest));
    if (kind == "block") {
      std::vector<int> parts;
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        parts.push_back(std::stoi(rest.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      return Restriction::block(std::move(parts));
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad restriction '" + text + "'");
  }
  throw UsageError("unknown restriction kind '" + kind + "'");
}

// "bh" (or empty) resolves later from the arity; numbers override.
double parse_p(const std::string& text) {
  if (text.empty() || text == "bh") return 0.0;
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return p;
  } catch (const std::logic_error&) {
    throw UsageError("--p must be 'bh' or a number, got '" + text + "'");
  }
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_document(const Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << doc.dump() << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << doc.dump() << '\n';
}

struct Globals {
  unsigned threads = 0;
  bool deterministic = false;
  bool csv = false;
  bool json = false;

  unsigned effective_threads() const { return deterministic ? 1u : threads; }
};

std::string norm_csv(const NormResult& r) {
  return "value,exact,work\n" + (r.exact_value ? std::to_string(*r.exact_value) : format_double(r.value)) + "," +
         (r.exact() ? "true" : "false") + "," + std::to_string(r.work) + "\n";
}

std::string ratio_csv(const RatioReport& r) {
  return "p,sum,norm,exact_norm,ratio,restriction\n" + format_double(r.p) + "," + format_double(r.sum) + "," +
         format_double(r.norm.value) + "," + (r.norm.exact() ? "true" : "false") + "," + format_double(r.ratio) +
         "," + to_string(r.restriction.kind) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohnenblust-Hille inequality toolkit: exact norms, coefficient sums, extremal families"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0 = available parallelism)");
  app.add_flag("--deterministic", g.deterministic, "Force a single thread");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_flag("--json", g.json, "JSON output (default)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a form from a named family");
  std::string family;
  int gen_m = 2, gen_n = 2;
  std::vector<std::size_t> gen_dims;
  double density = 1.0;
  std::string dist = "pm1";
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out;
  gen->add_option("--family", family, "s2 | s | r | a | ksz | random")->required();
  gen->add_option("--m", gen_m, "Arity");
  gen->add_option("--n", gen_n, "Dimension per slot (ksz, random)");
  gen->add_option("--dims", gen_dims, "Slot dimensions (random)")->delimiter(',');
  gen->add_option("--density", density, "Keep probability (random)");
  gen->add_option("--dist", dist, "pm1 | uniform | gaussian (random)");
  gen->add_option("--seed", gen_seed, "Seed (required for random families)");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // norm
  auto* norm = app.add_subcommand("norm", "Sup norm of a form or polynomial");
  std::string norm_in, norm_method = "auto";
  std::optional<std::uint64_t> norm_seed;
  unsigned restarts = 8, max_rounds = 200;
  std::uint64_t norm_budget = NormOptions{}.budget;
  norm->add_option("--in", norm_in, "Input document")->required();
  norm->add_option("--method", norm_method, "exact | ascent | auto");
  norm->add_option("--seed", norm_seed, "Seed for ascent");
  norm->add_option("--restarts", restarts, "Ascent restarts");
  norm->add_option("--max-rounds", max_rounds, "Ascent rounds per restart");
  norm->add_option("--budget", norm_budget, "Max enumerated sign assignments");

  // sum
  auto* sum = app.add_subcommand("sum", "Coefficient l_p sum");
  std::string sum_in, sum_p = "bh", sum_restrict = "full";
  sum->add_option("--in", sum_in, "Input document")->required();
  sum->add_option("--p", sum_p, "Exponent or 'bh' for 2m/(m+1)");
  sum->add_option("--restrict", sum_restrict, "full | card:M | omega:M | block:n1,n2,..");

  // ratio
  auto* ratio = app.add_subcommand("ratio", "Coefficient sum divided by the norm");
  std::string ratio_in, ratio_family, ratio_p = "bh", ratio_restrict = "full", ratio_method = "exact";
  int ratio_m = 2, ratio_n = 2;
  std::optional<std::uint64_t> ratio_seed;
  std::uint64_t ratio_budget = NormOptions{}.budget;
  ratio->add_option("--in", ratio_in, "Input document");
  ratio->add_option("--family", ratio_family, "Generate the input instead: s2 | s | r | a | ksz");
  ratio->add_option("--m", ratio_m, "Arity for --family");
  ratio->add_option("--n", ratio_n, "Dimension for --family ksz");
  ratio->add_option("--seed", ratio_seed, "Seed (ksz family, ascent)");
  ratio->add_option("--p", ratio_p, "Exponent or 'bh'");
  ratio->add_option("--restrict", ratio_restrict, "full | card:M | omega:M | block:n1,n2,..");
  ratio->add_option("--method", ratio_method, "exact | ascent");
  ratio->add_option("--budget", ratio_budget, "Max enumerated sign assignments");

  // construct
  auto* construct = app.add_subcommand("construct", "Proof constructions");
  construct->require_subcommand(1);
  auto* symmetrize = construct->add_subcommand("symmetrize", "Disjointify a form and take its diagonal polynomial");
  std::string sym_in, sym_out, sym_emb, sym_form_out;
  symmetrize->add_option("--in", sym_in, "Input form")->required();
  symmetrize->add_option("--out", sym_out, "Output polynomial (default stdout)");
  symmetrize->add_option("--emit-embedding", sym_emb, "Write the slot embedding here");
  symmetrize->add_option("--emit-form", sym_form_out, "Write the disjointified form here");
  auto* lift = construct->add_subcommand("lift", "Multiply a degree M-1 polynomial by x1^(m-M+1)");
  std::string lift_in, lift_out;
  int lift_M = 0, lift_m = 0;
  lift->add_option("--in", lift_in, "Input polynomial")->required();
  lift->add_option("--M", lift_M, "M (input degree is M-1)")->required();
  lift->add_option("--m", lift_m, "Target degree")->required();
  lift->add_option("--out", lift_out, "Output path (default stdout)");

  // search
  auto* search = app.add_subcommand("search", "Hill-climbing lower bounds for the constants");
  SearchConfig scfg;
  int search_M = 0;
  std::string search_p = "bh", emit_form;
  std::optional<std::uint64_t> search_seed;
  std::vector<int> table_ms, table_Ms;
  bool table = false;
  search->add_option("--m", scfg.m, "Arity");
  search->add_option("--dims", scfg.dims, "Slot dimensions")->delimiter(',');
  search->add_option("--M", search_M, "Card restriction (0 = full)");
  search->add_option("--p", search_p, "Exponent or 'bh'");
  search->add_option("--budget", scfg.budget, "Ratio evaluations");
  search->add_option("--restarts", scfg.restarts, "Random restarts");
  search->add_option("--norm-budget", scfg.norm.budget, "Max sign assignments per norm");
  search->add_option("--seed", search_seed, "Seed")->required();
  search->add_option("--emit-form", emit_form, "Write the best form here");
  search->add_flag("--table", table, "Tabulate over --ms x --Ms");
  search->add_option("--ms", table_ms, "Arities for --table")->delimiter(',');
  search->add_option("--Ms", table_Ms, "Restrictions for --table")->delimiter(',');

  // ksz-scaling
  auto* ksz = app.add_subcommand("ksz-scaling", "Norm growth of random +-1 forms");
  int ksz_m = 2;
  std::vector<int> ksz_ns{4, 8, 16};
  unsigned samples = 50;
  std::optional<std::uint64_t> ksz_seed;
  std::uint64_t ksz_budget = NormOptions{}.budget;
  ksz->add_option("--m", ksz_m, "Arity");
  ksz->add_option("--ns", ksz_ns, "Dimensions")->delimiter(',');
  ksz->add_option("--samples", samples, "Forms per dimension");
  ksz->add_option("--seed", ksz_seed, "Seed")->required();
  ksz->add_option("--budget", ksz_budget, "Max sign assignments per norm");

  // verify
  auto* verify = app.add_subcommand("verify", "Reproduce the reference quantities");
  std::string suite = "paper";
  verify->add_option("--suite", suite, "paper | quick")->check(CLI::IsMember({"paper", "quick"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const unsigned threads = g.effective_threads();
  try {
    if (*gen) {
      SeededSpec spec;
      spec.family = family_from_string(family);
      spec.m = gen_m;
      spec.n = gen_n;
      spec.dims = gen_dims;
      spec.density = density;
      spec.dist = coeff_dist_from_string(dist);
      const bool random = spec.family == SeededSpec::Family::ksz || spec.family == SeededSpec::Family::random_sparse;
      if (random && !gen_seed) throw UsageError("--seed is required for random families");
      spec.seed = gen_seed.value_or(0);
      emit_document(to_json(generate(spec)), gen_out, out);
      return kOk;
    }

    if (*norm) {
      const Document doc = load_document(norm_in);
      NormOptions no;
      no.budget = norm_budget;
      no.threads = threads;
      AscentOptions ao;
      ao.restarts = restarts;
      ao.max_rounds = max_rounds;
      ao.threads = threads;
      NormResult result;
      if (const auto* form = std::get_if<MultilinearForm>(&doc)) {
        std::string method = norm_method;
        if (method == "auto") method = form->field() == Field::real ? "exact" : "ascent";
        if (method == "exact") {
          result = exact_norm_real(*form, no);
        } else if (method == "ascent") {
          if (!norm_seed) throw UsageError("--seed is required for ascent");
          ao.seed = *norm_seed;
          result = ascent_lower_bound(*form, ao);
        } else {
          throw UsageError("--method must be exact, ascent or auto");
        }
      } else {
        const auto& poly = std::get<HomogeneousPolynomial>(doc);
        const bool exact_path = poly.field() == Field::real && poly.multiaffine();
        if (!exact_path && !norm_seed) throw UsageError("--seed is required for polynomial ascent");
        ao.seed = norm_seed.value_or(0);
        result = poly_lower_bound(poly, ao, no);
      }
      if (g.csv) {
        out << norm_csv(result);
      } else {
        write_json(out, to_json(result));
      }
      return kOk;
    }

    if (*sum) {
      const Document doc = load_document(sum_in);
      const Restriction r = parse_restriction(sum_restrict);
      double p = parse_p(sum_p);
      double value = 0.0;
      if (const auto* form = std::get_if<MultilinearForm>(&doc)) {
        const int m = static_cast<int>(form->arity());
        switch (r.kind) {
          case Restriction::Kind::full:
            p = p > 0 ? p : bh_exponent(m);
            value = lp_sum(coefficient_magnitudes(*form), p);
            break;
          case Restriction::Kind::card_leq:
          case Restriction::Kind::omega_leq:
            p = p > 0 ? p : bh_exponent(m);
            value = restricted_sum(*form, r.M, p);
            break;
          case Restriction::Kind::block:
            p = p > 0 ? p : bh_exponent(static_cast<int>(r.partition.size()));
            value = block_sum(*form, r.partition, p);
            break;
        }
      } else {
        const auto& poly = std::get<HomogeneousPolynomial>(doc);
        p = p > 0 ? p : bh_exponent(static_cast<int>(std::max<std::uint32_t>(poly.degree(), 1)));
        if (r.kind == Restriction::Kind::block) throw UsageError("block restriction needs a form");
        value = r.kind == Restriction::Kind::full ? lp_sum(coefficient_magnitudes(poly), p)
                                                  : poly_restricted_sum(poly, r.M, p);
      }
      if (g.csv) {
        out << "p,sum,restriction\n" << format_double(p) << ',' << format_double(value) << ','
            << to_string(r.kind) << '\n';
      } else {
        Json j;
        j["p"] = p;
        j["sum"] = value;
        j["restriction"] = to_json(r);
        write_json(out, j);
      }
      return kOk;
    }

    if (*ratio) {
      if (ratio_in.empty() == ratio_family.empty()) throw UsageError("give exactly one of --in and --family");
      NormMethod method;
      method.exact.budget = ratio_budget;
      method.exact.threads = threads;
      method.ascent.threads = threads;
      if (ratio_method == "ascent") {
        if (!ratio_seed) throw UsageError("--seed is required for ascent");
        method.kind = NormMethod::Kind::ascent;
        method.ascent.seed = *ratio_seed;
      } else if (ratio_method != "exact") {
        throw UsageError("--method must be exact or ascent");
      }
      const Restriction r = parse_restriction(ratio_restrict);
      const double p = parse_p(ratio_p);
      RatioReport report;
      if (!ratio_family.empty()) {
        SeededSpec spec;
        spec.family = family_from_string(ratio_family);
        spec.m = ratio_m;
        spec.n = ratio_n;
        const bool random = spec.family == SeededSpec::Family::ksz || spec.family == SeededSpec::Family::random_sparse;
        if (random && !ratio_seed) throw UsageError("--seed is required for random families");
        spec.seed = ratio_seed.value_or(0);
        report = ratio_report(generate(spec), p, r, method);
      } else {
        const Document doc = load_document(ratio_in);
        if (const auto* form = std::get_if<MultilinearForm>(&doc)) {
          report = ratio_report(*form, p, r, method);
        } else {
          const auto& poly = std::get<HomogeneousPolynomial>(doc);
          if (!(poly.field() == Field::real && poly.multiaffine()) && !ratio_seed) {
            throw UsageError("--seed is required for polynomial ascent");
          }
          method.ascent.seed = ratio_seed.value_or(0);
          report = ratio_report(poly, p, r, method);
        }
      }
      if (g.csv) {
        out << ratio_csv(report);
      } else {
        write_json(out, to_json(report));
      }
      return kOk;
    }

    if (*construct) {
      if (*symmetrize) {
        const MultilinearForm form = load_form(sym_in);
        const auto [t1, emb] = disjointify(form);
        if (!sym_emb.empty()) emit_document(to_json(emb), sym_emb, out);
        if (!sym_form_out.empty()) emit_document(to_json(t1), sym_form_out, out);
        emit_document(to_json(diagonal_polynomial(t1)), sym_out, out);
        return kOk;
      }
      const HomogeneousPolynomial poly = load_polynomial(lift_in);
      emit_document(to_json(lift_polynomial(poly, lift_M, lift_m)), lift_out, out);
      return kOk;
    }

    if (*search) {
      scfg.seed = *search_seed;
      scfg.threads = threads;
      scfg.p = parse_p(search_p);
      if (table) {
        if (table_ms.empty() || table_Ms.empty()) throw UsageError("--table needs --ms and --Ms");
        const auto t = constant_table(table_ms, table_Ms, scfg);
        if (g.csv) {
          out << t.to_csv();
        } else {
          write_json(out, t.to_json());
        }
        return kOk;
      }
      scfg.restriction = search_M > 0 && search_M < scfg.m ? Restriction::card_leq(search_M) : Restriction::full();
      if (search_M > scfg.m) throw UsageError("--M must not exceed --m");
      const auto res = maximize_ratio(scfg);
      if (!emit_form.empty()) emit_document(to_json(res.best), emit_form, out);
      if (g.csv) {
        out << "m,M,p,best_ratio,norm,exact_norm,evaluations,best_restart,form_hash\n"
            << scfg.m << ',' << (search_M > 0 ? search_M : scfg.m) << ',' << format_double(res.report.p) << ','
            << format_double(res.report.ratio) << ',' << format_double(res.report.norm.value) << ','
            << (res.report.norm.exact() ? "true" : "false") << ',' << res.evaluations << ',' << res.best_restart
            << ',' << content_hash(to_json(res.best)) << '\n';
      } else {
        Json j;
        j["report"] = to_json(res.report);
        j["evaluations"] = res.evaluations;
        j["best_restart"] = res.best_restart;
        j["form_hash"] = content_hash(to_json(res.best));
        j["form"] = to_json(res.best);
        j["note"] = "empirical lower bound";
        write_json(out, j);
      }
      return kOk;
    }

    if (*ksz) {
      KszOptions ko;
      ko.threads = threads;
      ko.norm.budget = ksz_budget;
      const auto t = ksz_scaling_experiment(ksz_m, ksz_ns, samples, *ksz_seed, ko);
      if (g.csv) {
        out << t.to_csv();
      } else {
        write_json(out, t.to_json());
      }
      return kOk;
    }

    if (*verify) {
      VerifyOptions vo;
      vo.suite = suite;
      vo.threads = threads;
      vo.deterministic = g.deterministic;
      const auto outcomes = run_verify_suite(vo);
      if (g.csv) {
        out << to_csv(outcomes);
      } else {
        write_json(out, to_json(outcomes));
      }
      const bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.pass; });
      return all ? kOk : kCheckFailed;
    }
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bhlab::cli
