#include "bhlab/scalar.hpp"

#include <string>

#include "bhlab/error.hpp"

namespace bhlab {

std::string_view to_string(Field field) { return field == Field::real ? "real" : "complex"; }

Field field_from_string(std::string_view name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw DomainError("unknown field '" + std::string(name) + "'");
}

Scalar Scalar::real(double value) {
  Scalar s;
  s.re_ = value;
  if (std::isfinite(value) && std::abs(value) < kExactIntegerLimit && std::trunc(value) == value) {
    s.exact_ = static_cast<std::int64_t>(value);
  }
  return s;
}

Scalar Scalar::integer(std::int64_t value) {
  Scalar s;
  s.re_ = static_cast<double>(value);
  if (static_cast<double>(s.re_) == static_cast<double>(value) &&
      std::abs(s.re_) < kExactIntegerLimit) {
    s.exact_ = value;
  }
  return s;
}

Scalar Scalar::complex(double re, double im) {
  Scalar s;
  s.field_ = Field::complex;
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::as(Field field) const {
  if (field == field_) return *this;
  if (field == Field::complex) return complex(re_, im_);
  if (im_ != 0.0) throw DomainError("complex coefficient in a real form");
  return real(re_);
}

}  // namespace bhlab
