#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polydecomp {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator.
using Rational = mpq_class;
using Real = double;
using Complex = std::complex<double>;

enum class Field { rational, real64, complex64 };

std::string_view to_string(Field field);
Field parse_field(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Field field = Field::rational;
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
};

template <>
struct ScalarTraits<Real> {
  static constexpr bool exact = false;
  static constexpr Field field = Field::real64;
  static double magnitude(Real x) { return std::abs(x); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr Field field = Field::complex64;
  static double magnitude(const Complex& x) { return std::abs(x); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
bool is_zero(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return sgn(x) == 0;
  } else {
    return x == T{};
  }
}

/// Parses a single coefficient. Rationals accept integers, "p/q" and plain
/// decimals (converted exactly); complex values accept "a+bi", "a", "bi".
/// Throws ParseError.
template <Scalar T>
T parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
Real parse_scalar<Real>(std::string_view text);
template <>
Complex parse_scalar<Complex>(std::string_view text);

std::string format_scalar(const Rational& x);
std::string format_scalar(Real x);
std::string format_scalar(const Complex& x);

}  // namespace polydecomp
