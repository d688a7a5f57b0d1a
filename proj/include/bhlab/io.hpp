#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "bhlab/constructions.hpp"
#include "bhlab/core.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/sums.hpp"

namespace bhlab {

using Json = nlohmann::ordered_json;

// Form document:
//   {"kind":"form","m":2,"field":"real","dims":[2,2],
//    "coeffs":[{"idx":[1,1],"re":1},{"idx":[2,2],"re":-1}]}
// Polynomial document:
//   {"kind":"polynomial","m":2,"n":3,"field":"real",
//    "coeffs":[{"alpha":[[1,2]],"re":1}]}
// Indices are 1-based. "im" is optional. Unknown fields, duplicate entries and
// zero coefficients are rejected with a ParseError naming the JSON pointer.
Json to_json(const MultilinearForm& form);
Json to_json(const HomogeneousPolynomial& poly);
MultilinearForm form_from_json(const Json& doc);
HomogeneousPolynomial polynomial_from_json(const Json& doc);

using Document = std::variant<MultilinearForm, HomogeneousPolynomial>;
Document document_from_json(const Json& doc);

Json parse_json(std::istream& in);
Json parse_json(const std::string& text);

MultilinearForm load_form(const std::filesystem::path& path);
MultilinearForm load_form(std::istream& in);
HomogeneousPolynomial load_polynomial(const std::filesystem::path& path);
HomogeneousPolynomial load_polynomial(std::istream& in);
Document load_document(const std::filesystem::path& path);

void save_form(const MultilinearForm& form, const std::filesystem::path& path);
void save_form(const MultilinearForm& form, std::ostream& out);
void save_polynomial(const HomogeneousPolynomial& poly, const std::filesystem::path& path);
void save_polynomial(const HomogeneousPolynomial& poly, std::ostream& out);

// {"value":..,"exact":true,"witness":[[..]],"work":..}
Json to_json(const NormResult& result);
// {"p":..,"sum":..,"norm":..,"exact_norm":bool,"ratio":..,"restriction":{..}}
Json to_json(const RatioReport& report);
Json to_json(const Restriction& restriction);
Json to_json(const SlotEmbedding& embedding);

// Writes a double so that it reads back bit-identically.
std::string format_double(double x);

}  // namespace bhlab
