#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace bhlab {

enum class Field { real, complex };

std::string_view to_string(Field field);
Field field_from_string(std::string_view name);

// A real or complex coefficient. Real scalars whose value is an integer of
// magnitude below 2^53 also carry that integer, so sums and products over
// +-1 coefficient forms can be carried out without rounding.
class Scalar {
 public:
  Scalar() = default;

  static Scalar real(double value);
  static Scalar integer(std::int64_t value);
  static Scalar complex(double re, double im);
  static Scalar complex(std::complex<double> z) { return complex(z.real(), z.imag()); }

  Field field() const noexcept { return field_; }
  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  const std::optional<std::int64_t>& exact_integer() const noexcept { return exact_; }

  std::complex<double> value() const noexcept { return {re_, im_}; }
  double abs() const noexcept { return field_ == Field::real ? std::abs(re_) : std::hypot(re_, im_); }
  bool is_zero() const noexcept { return re_ == 0.0 && im_ == 0.0; }

  // Same numeric value re-tagged for a form over `field`; exact payload is
  // dropped when moving to the complex field.
  Scalar as(Field field) const;

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Field field_ = Field::real;
  double re_ = 0.0;
  double im_ = 0.0;
  std::optional<std::int64_t> exact_;
};

// Largest integer magnitude for which a double is exact.
inline constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

}  // namespace bhlab
