#include "bhlab/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "bhlab/error.hpp"

namespace bhlab {

namespace {

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw ParseError(ptr(where, it.key()), "unknown field");
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ptr(where, key), "missing field");
  return *it;
}

std::uint64_t positive_integer(const Json& j, const std::string& where) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() >= 1) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 1) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ParseError(where, "expected a positive integer");
}

std::uint64_t nonnegative_integer(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ParseError(where, "expected a non-negative integer");
}

Scalar read_scalar(const Json& entry, Field f, const std::string& where) {
  const Json& re = field(entry, "re", where);
  if (!re.is_number()) throw ParseError(ptr(where, "re"), "expected a number");
  double im = 0.0;
  if (auto it = entry.find("im"); it != entry.end()) {
    if (!it->is_number()) throw ParseError(ptr(where, "im"), "expected a number");
    im = it->get<double>();
  }
  Scalar s;
  if (f == Field::real) {
    if (im != 0.0) throw ParseError(ptr(where, "im"), "imaginary part in a real document");
    s = re.is_number_float() ? Scalar::real(re.get<double>()) : Scalar::integer(re.get<std::int64_t>());
  } else {
    s = Scalar::complex(re.get<double>(), im);
  }
  if (s.is_zero()) throw ParseError(where, "zero coefficients are not stored");
  return s;
}

void write_scalar(Json& entry, const Scalar& c) {
  if (c.field() == Field::real) {
    if (c.exact_integer()) {
      entry["re"] = *c.exact_integer();
    } else {
      entry["re"] = c.re();
    }
    return;
  }
  entry["re"] = c.re();
  entry["im"] = c.im();
}

Field read_field(const Json& doc) {
  const Json& f = field(doc, "field", "");
  if (!f.is_string()) throw ParseError("/field", "expected a string");
  try {
    return field_from_string(f.get<std::string>());
  } catch (const DomainError& e) {
    throw ParseError("/field", e.what());
  }
}

void expect_kind(const Json& doc, const char* kind) {
  const Json& k = field(doc, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError("/kind", std::string("expected \"") + kind + "\"");
  }
}

}  // namespace

Json to_json(const MultilinearForm& form) {
  Json doc;
  doc["kind"] = "form";
  doc["m"] = form.arity();
  doc["field"] = std::string(to_string(form.field()));
  doc["dims"] = form.dims();
  Json coeffs = Json::array();
  for (const auto& [t, c] : form.coeffs()) {
    Json e;
    e["idx"] = t;
    write_scalar(e, c);
    coeffs.push_back(std::move(e));
  }
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

Json to_json(const HomogeneousPolynomial& poly) {
  Json doc;
  doc["kind"] = "polynomial";
  doc["m"] = poly.degree();
  doc["n"] = poly.dimension();
  doc["field"] = std::string(to_string(poly.field()));
  Json coeffs = Json::array();
  for (const auto& [alpha, c] : poly.coeffs()) {
    Json e;
    Json a = Json::array();
    for (const auto& [v, x] : alpha.entries()) a.push_back({v, x});
    e["alpha"] = std::move(a);
    write_scalar(e, c);
    coeffs.push_back(std::move(e));
  }
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

MultilinearForm form_from_json(const Json& doc) {
  require_object(doc, "");
  reject_unknown(doc, {"kind", "m", "field", "dims", "coeffs"}, "");
  expect_kind(doc, "form");
  const std::uint64_t m = positive_integer(field(doc, "m", ""), "/m");
  const Field f = read_field(doc);
  const Json& jd = field(doc, "dims", "");
  if (!jd.is_array()) throw ParseError("/dims", "expected an array");
  if (jd.size() != m) throw ParseError("/dims", "length differs from m");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < jd.size(); ++i) dims.push_back(positive_integer(jd[i], ptr("/dims", i)));

  const Json& jc = field(doc, "coeffs", "");
  if (!jc.is_array()) throw ParseError("/coeffs", "expected an array");
  MultilinearForm::Coeffs coeffs;
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string where = ptr("/coeffs", k);
    const Json& e = jc[k];
    require_object(e, where);
    reject_unknown(e, {"idx", "re", "im"}, where);
    const Json& idx = field(e, "idx", where);
    if (!idx.is_array() || idx.size() != m) throw ParseError(ptr(where, "idx"), "expected m indices");
    IndexTuple t;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const std::string at = ptr(ptr(where, "idx"), s);
      const std::uint64_t i = positive_integer(idx[s], at);
      if (i > dims[s]) throw ParseError(at, "index exceeds slot dimension " + std::to_string(dims[s]));
      t.push_back(static_cast<std::uint32_t>(i));
    }
    Scalar c = read_scalar(e, f, where);
    if (!coeffs.emplace(std::move(t), c).second) throw ParseError(where, "duplicate tuple");
  }
  return MultilinearForm(std::move(dims), f, std::move(coeffs));
}

HomogeneousPolynomial polynomial_from_json(const Json& doc) {
  require_object(doc, "");
  reject_unknown(doc, {"kind", "m", "n", "field", "coeffs"}, "");
  expect_kind(doc, "polynomial");
  const std::uint64_t m = nonnegative_integer(field(doc, "m", ""), "/m");
  const std::uint64_t n = positive_integer(field(doc, "n", ""), "/n");
  const Field f = read_field(doc);
  const Json& jc = field(doc, "coeffs", "");
  if (!jc.is_array()) throw ParseError("/coeffs", "expected an array");
  HomogeneousPolynomial::Coeffs coeffs;
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string where = ptr("/coeffs", k);
    const Json& e = jc[k];
    require_object(e, where);
    reject_unknown(e, {"alpha", "re", "im"}, where);
    const Json& ja = field(e, "alpha", where);
    if (!ja.is_array()) throw ParseError(ptr(where, "alpha"), "expected an array of [variable, exponent]");
    std::vector<MultiIndex::Entry> entries;
    for (std::size_t i = 0; i < ja.size(); ++i) {
      const std::string at = ptr(ptr(where, "alpha"), i);
      if (!ja[i].is_array() || ja[i].size() != 2) throw ParseError(at, "expected [variable, exponent]");
      const auto var = positive_integer(ja[i][0], at + "/0");
      const auto exp = positive_integer(ja[i][1], at + "/1");
      if (var > n) throw ParseError(at + "/0", "variable exceeds n");
      entries.emplace_back(static_cast<std::uint32_t>(var), static_cast<std::uint32_t>(exp));
    }
    MultiIndex alpha;
    try {
      alpha = MultiIndex(std::move(entries));
    } catch (const DomainError& err) {
      throw ParseError(ptr(where, "alpha"), err.what());
    }
    if (alpha.degree() != m) throw ParseError(ptr(where, "alpha"), "monomial degree differs from m");
    Scalar c = read_scalar(e, f, where);
    if (!coeffs.emplace(std::move(alpha), c).second) throw ParseError(where, "duplicate monomial");
  }
  return HomogeneousPolynomial(static_cast<std::uint32_t>(m), n, f, std::move(coeffs));
}

Document document_from_json(const Json& doc) {
  require_object(doc, "");
  const Json& k = field(doc, "kind", "");
  if (k == "form") return form_from_json(doc);
  if (k == "polynomial") return polynomial_from_json(doc);
  throw ParseError("/kind", "expected \"form\" or \"polynomial\"");
}

Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

Json parse_json(const std::string& text) {
  std::istringstream in(text);
  return parse_json(in);
}

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

MultilinearForm load_form(std::istream& in) { return form_from_json(parse_json(in)); }
MultilinearForm load_form(const std::filesystem::path& path) {
  auto in = open_in(path);
  return load_form(in);
}

HomogeneousPolynomial load_polynomial(std::istream& in) { return polynomial_from_json(parse_json(in)); }
HomogeneousPolynomial load_polynomial(const std::filesystem::path& path) {
  auto in = open_in(path);
  return load_polynomial(in);
}

Document load_document(const std::filesystem::path& path) {
  auto in = open_in(path);
  return document_from_json(parse_json(in));
}

void save_form(const MultilinearForm& form, std::ostream& out) { out << to_json(form).dump() << '\n'; }
void save_form(const MultilinearForm& form, const std::filesystem::path& path) {
  auto out = open_out(path);
  save_form(form, out);
}

void save_polynomial(const HomogeneousPolynomial& poly, std::ostream& out) { out << to_json(poly).dump() << '\n'; }
void save_polynomial(const HomogeneousPolynomial& poly, const std::filesystem::path& path) {
  auto out = open_out(path);
  save_polynomial(poly, out);
}

Json to_json(const NormResult& result) {
  Json j;
  if (result.exact_value) {
    j["value"] = *result.exact_value;
  } else {
    j["value"] = result.value;
  }
  j["exact"] = result.exact();
  bool real = true;
  for (const auto& v : result.witness) {
    for (const auto& z : v) real = real && z.imag() == 0.0;
  }
  Json w = Json::array();
  for (const auto& v : result.witness) {
    Json row = Json::array();
    for (const auto& z : v) {
      if (real) {
        if (z.real() == 1.0 || z.real() == -1.0) {
          row.push_back(static_cast<int>(z.real()));
        } else {
          row.push_back(z.real());
        }
      } else {
        row.push_back({z.real(), z.imag()});
      }
    }
    w.push_back(std::move(row));
  }
  j["witness"] = std::move(w);
  j["work"] = result.work;
  if (result.eliminated_slot) j["eliminated_slot"] = *result.eliminated_slot + 1;
  return j;
}

Json to_json(const Restriction& restriction) {
  Json j;
  j["kind"] = to_string(restriction.kind);
  if (restriction.kind == Restriction::Kind::card_leq || restriction.kind == Restriction::Kind::omega_leq) {
    j["M"] = restriction.M;
  }
  if (restriction.kind == Restriction::Kind::block) j["partition"] = restriction.partition;
  return j;
}

Json to_json(const RatioReport& report) {
  Json j;
  j["p"] = report.p;
  j["sum"] = report.sum;
  j["norm"] = report.norm.exact_value ? Json(*report.norm.exact_value) : Json(report.norm.value);
  j["exact_norm"] = report.norm.exact();
  j["ratio"] = report.ratio;
  j["restriction"] = to_json(report.restriction);
  return j;
}

Json to_json(const SlotEmbedding& embedding) {
  Json j;
  j["kind"] = "embedding";
  j["m"] = embedding.m;
  j["n"] = embedding.n;
  j["rule"] = "sigma_i(j) = m*(j-1) + i";
  Json maps = Json::array();
  for (std::size_t s = 0; s < embedding.m; ++s) {
    Json row = Json::array();
    for (std::uint32_t jj = 1; jj <= embedding.n; ++jj) row.push_back(embedding.map(s, jj));
    maps.push_back(std::move(row));
  }
  j["maps"] = std::move(maps);
  return j;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace bhlab
