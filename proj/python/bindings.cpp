#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bhlab/constructions.hpp"
#include "bhlab/error.hpp"
#include "bhlab/generators.hpp"
#include "bhlab/io.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/search.hpp"
#include "bhlab/sums.hpp"
#include "bhlab/verify.hpp"

namespace py = pybind11;
using namespace bhlab;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Scalar scalar_from_python(const py::handle& value, Field field) {
  if (py::isinstance<py::int_>(value)) return Scalar::integer(value.cast<std::int64_t>()).as(field);
  if (field == Field::real) return Scalar::real(value.cast<double>());
  return Scalar::complex(value.cast<std::complex<double>>());
}

py::object scalar_to_python(const Scalar& s) {
  if (s.field() == Field::complex) return py::cast(s.value());
  if (s.exact_integer()) return py::int_(*s.exact_integer());
  return py::float_(s.re());
}

MultilinearForm make_form(std::vector<std::size_t> dims, const py::dict& coeffs, const std::string& field_name) {
  const Field field = field_from_string(field_name);
  MultilinearForm::Coeffs c;
  for (const auto& [key, value] : coeffs) c[key.cast<IndexTuple>()] = scalar_from_python(value, field);
  return MultilinearForm(std::move(dims), field, std::move(c));
}

HomogeneousPolynomial make_poly(std::uint32_t degree, std::size_t n, const py::dict& coeffs,
                                const std::string& field_name) {
  const Field field = field_from_string(field_name);
  HomogeneousPolynomial::Coeffs c;
  for (const auto& [key, value] : coeffs) {
    c[MultiIndex(key.cast<std::vector<MultiIndex::Entry>>())] = scalar_from_python(value, field);
  }
  return HomogeneousPolynomial(degree, n, field, std::move(c));
}

Restriction make_restriction(const std::string& kind, int M, const std::vector<int>& partition) {
  if (kind == "full") return Restriction::full();
  if (kind == "card") return Restriction::card_leq(M);
  if (kind == "omega") return Restriction::omega_leq(M);
  if (kind == "block") return Restriction::block(partition);
  throw DomainError("restriction must be full, card, omega or block");
}

NormMethod make_method(const std::string& method, std::uint64_t seed, std::uint64_t budget, unsigned threads) {
  NormMethod m;
  m.exact.budget = budget;
  m.exact.threads = threads;
  m.ascent.seed = seed;
  m.ascent.threads = threads;
  if (method == "ascent") {
    m.kind = NormMethod::Kind::ascent;
  } else if (method != "exact") {
    throw DomainError("method must be exact or ascent");
  }
  return m;
}

constexpr std::uint64_t kBudget = NormOptions{}.budget;

}  // namespace

PYBIND11_MODULE(_bhlab, mod) {
  mod.doc() = "Exact multilinear norms, Bohnenblust-Hille coefficient sums and extremal families";

  py::register_exception<BudgetError>(mod, "BudgetError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<MultilinearForm>(mod, "Form")
      .def(py::init(&make_form), py::arg("dims"), py::arg("coeffs"), py::arg("field") = "real",
           "coeffs maps 1-based index tuples to values")
      .def_property_readonly("dims", &MultilinearForm::dims)
      .def_property_readonly("arity", &MultilinearForm::arity)
      .def_property_readonly("field", [](const MultilinearForm& f) { return std::string(to_string(f.field())); })
      .def_property_readonly("coeffs",
                             [](const MultilinearForm& f) {
                               py::dict d;
                               for (const auto& [t, v] : f.coeffs()) d[py::tuple(py::cast(t))] = scalar_to_python(v);
                               return d;
                             })
      .def("__len__", &MultilinearForm::size)
      .def("__eq__", [](const MultilinearForm& a, const MultilinearForm& b) { return a == b; })
      .def("__call__",
           [](const MultilinearForm& f, const std::vector<ComplexVector>& args) {
             return scalar_to_python(evaluate_form(f, args));
           })
      .def("to_json", [](const MultilinearForm& f) { return to_json(f).dump(); })
      .def_static("from_json", [](const std::string& text) { return form_from_json(parse_json(text)); })
      .def("__repr__", [](const MultilinearForm& f) {
        return "Form(m=" + std::to_string(f.arity()) + ", terms=" + std::to_string(f.size()) + ")";
      });

  py::class_<HomogeneousPolynomial>(mod, "Polynomial")
      .def(py::init(&make_poly), py::arg("degree"), py::arg("n"), py::arg("coeffs"), py::arg("field") = "real",
           "coeffs maps tuples of (variable, exponent) pairs to values")
      .def_property_readonly("degree", &HomogeneousPolynomial::degree)
      .def_property_readonly("n", &HomogeneousPolynomial::dimension)
      .def_property_readonly("field",
                             [](const HomogeneousPolynomial& p) { return std::string(to_string(p.field())); })
      .def_property_readonly("coeffs",
                             [](const HomogeneousPolynomial& p) {
                               py::dict d;
                               for (const auto& [a, v] : p.coeffs()) {
                                 py::list entries;
                                 for (const auto& [var, e] : a.entries()) entries.append(py::make_tuple(var, e));
                                 d[py::tuple(entries)] = scalar_to_python(v);
                               }
                               return d;
                             })
      .def_property_readonly("multiaffine", &HomogeneousPolynomial::multiaffine)
      .def("__len__", &HomogeneousPolynomial::size)
      .def("__eq__", [](const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) { return a == b; })
      .def("__call__",
           [](const HomogeneousPolynomial& p, const std::vector<std::complex<double>>& x) {
             return scalar_to_python(evaluate_poly(p, x));
           })
      .def("to_json", [](const HomogeneousPolynomial& p) { return to_json(p).dump(); })
      .def_static("from_json", [](const std::string& text) { return polynomial_from_json(parse_json(text)); })
      .def("__repr__", [](const HomogeneousPolynomial& p) {
        return "Polynomial(degree=" + std::to_string(p.degree()) + ", terms=" + std::to_string(p.size()) + ")";
      });

  // generators
  mod.def("s_family", &s_family, py::arg("m"));
  mod.def("r_family", &r_family, py::arg("m"));
  mod.def("a_family", &a_family, py::arg("m"));
  mod.def("ksz_random", &ksz_random, py::arg("m"), py::arg("n"), py::arg("seed"),
          py::arg("budget") = kDefaultGeneratorBudget);
  mod.def(
      "random_sparse",
      [](int m, const std::vector<std::size_t>& dims, double density, const std::string& dist, std::uint64_t seed) {
        return random_sparse(m, dims, density, coeff_dist_from_string(dist), seed);
      },
      py::arg("m"), py::arg("dims"), py::arg("density"), py::arg("dist") = "pm1", py::arg("seed"));
  mod.def(
      "generate",
      [](const std::string& family, int m, int n, std::uint64_t seed) {
        SeededSpec spec;
        spec.family = family_from_string(family);
        spec.m = m;
        spec.n = n;
        spec.seed = seed;
        return generate(spec);
      },
      py::arg("family"), py::arg("m") = 2, py::arg("n") = 2, py::arg("seed") = 0);

  // norms
  mod.def(
      "exact_norm",
      [](const MultilinearForm& f, std::uint64_t budget, unsigned threads) {
        return to_python(to_json(exact_norm_real(f, {budget, threads})));
      },
      py::arg("form"), py::arg("budget") = kBudget, py::arg("threads") = 1);
  mod.def(
      "brute_force_norm", [](const MultilinearForm& f, std::uint64_t budget) { return brute_force_norm_real(f, {budget, 1}); },
      py::arg("form"), py::arg("budget") = kBudget);
  mod.def(
      "ascent_norm",
      [](const MultilinearForm& f, std::uint64_t seed, unsigned restarts, unsigned max_rounds) {
        return to_python(to_json(ascent_lower_bound(f, {seed, restarts, max_rounds, 1})));
      },
      py::arg("form"), py::arg("seed"), py::arg("restarts") = 8, py::arg("max_rounds") = 200);
  mod.def(
      "poly_norm",
      [](const HomogeneousPolynomial& p, std::uint64_t seed, unsigned restarts, unsigned max_rounds,
         std::uint64_t budget) {
        return to_python(to_json(poly_lower_bound(p, {seed, restarts, max_rounds, 1}, {budget, 1})));
      },
      py::arg("poly"), py::arg("seed") = 0, py::arg("restarts") = 8, py::arg("max_rounds") = 200,
      py::arg("budget") = kBudget);

  // sums
  mod.def("bh_exponent", py::overload_cast<int>(&bh_exponent), py::arg("m"));
  mod.def(
      "lp_sum", [](const std::vector<double>& a, double p) { return lp_sum(a, p); }, py::arg("values"), py::arg("p"));
  mod.def("restricted_sum", &restricted_sum, py::arg("form"), py::arg("M"), py::arg("p"));
  mod.def(
      "block_sum", [](const MultilinearForm& f, const std::vector<int>& part, double p) { return block_sum(f, part, p); },
      py::arg("form"), py::arg("partition"), py::arg("p") = 0.0);
  mod.def("poly_restricted_sum", &poly_restricted_sum, py::arg("poly"), py::arg("M"), py::arg("p"));
  mod.def(
      "interpolation_bound",
      [](const std::vector<double>& a, double p1, double p2, double theta) {
        const auto r = interpolation_bound(a, p1, p2, theta);
        py::dict d;
        d["target_p"] = r.target_p;
        d["value"] = r.value;
        d["bound"] = r.bound;
        d["holds"] = r.holds;
        return d;
      },
      py::arg("values"), py::arg("p1"), py::arg("p2"), py::arg("theta"));
  mod.def("theorem_upper_bound", &theorem_upper_bound, py::arg("m"), py::arg("M"));
  mod.def(
      "ratio_report",
      [](const py::object& target, double p, const std::string& restrict, int M, const std::vector<int>& partition,
         const std::string& method, std::uint64_t seed, std::uint64_t budget) {
        const auto r = make_restriction(restrict, M, partition);
        const auto nm = make_method(method, seed, budget, 1);
        if (py::isinstance<HomogeneousPolynomial>(target)) {
          return to_python(to_json(ratio_report(target.cast<const HomogeneousPolynomial&>(), p, r, nm)));
        }
        return to_python(to_json(ratio_report(target.cast<const MultilinearForm&>(), p, r, nm)));
      },
      py::arg("target"), py::arg("p") = 0.0, py::arg("restrict") = "full", py::arg("M") = 0,
      py::arg("partition") = std::vector<int>{}, py::arg("method") = "exact", py::arg("seed") = 0,
      py::arg("budget") = kBudget);

  // constructions
  mod.def(
      "disjointify",
      [](const MultilinearForm& f) {
        auto d = disjointify(f);
        return py::make_tuple(std::move(d.form), to_python(to_json(d.embedding)));
      },
      py::arg("form"));
  mod.def("diagonal_polynomial", &diagonal_polynomial, py::arg("form"));
  mod.def("lift_polynomial", &lift_polynomial, py::arg("poly"), py::arg("M"), py::arg("m"));

  // search and experiments
  mod.def(
      "search",
      [](int m, const std::vector<std::size_t>& dims, double p, int M, std::uint64_t budget, unsigned restarts,
         std::uint64_t seed, unsigned threads, std::optional<MultilinearForm> start) {
        SearchConfig c;
        c.m = m;
        c.dims = dims;
        c.p = p;
        c.restriction = M > 0 && M < m ? Restriction::card_leq(M) : Restriction::full();
        c.budget = budget;
        c.restarts = restarts;
        c.seed = seed;
        c.threads = threads;
        c.start = std::move(start);
        auto res = maximize_ratio(c);
        py::dict d;
        d["report"] = to_python(to_json(res.report));
        d["evaluations"] = res.evaluations;
        d["best_restart"] = res.best_restart;
        d["form"] = std::move(res.best);
        return d;
      },
      py::arg("m"), py::arg("dims"), py::arg("p") = 0.0, py::arg("M") = 0, py::arg("budget") = 10000,
      py::arg("restarts") = 8, py::arg("seed"), py::arg("threads") = 1, py::arg("start") = py::none());
  mod.def(
      "constant_table",
      [](const std::vector<int>& ms, const std::vector<int>& Ms, std::uint64_t budget, unsigned restarts,
         std::uint64_t seed) {
        SearchConfig c;
        c.budget = budget;
        c.restarts = restarts;
        c.seed = seed;
        return to_python(constant_table(ms, Ms, c).to_json());
      },
      py::arg("ms"), py::arg("Ms"), py::arg("budget") = 10000, py::arg("restarts") = 8, py::arg("seed"));
  mod.def(
      "ksz_scaling",
      [](int m, const std::vector<int>& ns, unsigned samples, std::uint64_t seed) {
        return to_python(ksz_scaling_experiment(m, ns, samples, seed).to_json());
      },
      py::arg("m"), py::arg("ns"), py::arg("samples"), py::arg("seed"));
  mod.def(
      "verify",
      [](const std::string& suite, unsigned threads, bool deterministic) {
        return to_python(to_json(run_verify_suite({suite, threads, deterministic})));
      },
      py::arg("suite") = "quick", py::arg("threads") = 1, py::arg("deterministic") = true);
}
