#pragma once

// Polynomial text format: comma-separated coefficients in descending power
// order, leading coefficient first and constant term last, e.g. "1,4,5,2,0"
// for x^4 + 4x^3 + 5x^2 + 2x. Coefficients use the scalar literal syntax of
// parse_scalar ("p/q" for rationals, "a+bi" for complex).

#include <string>
#include <string_view>
#include <vector>

#include "polydecomp/polynomial.hpp"

namespace polydecomp {

/// Splits on commas and trims blanks; empty fields are a ParseError.
std::vector<std::string_view> split_fields(std::string_view text);

template <Scalar T>
Polynomial<T> parse_polynomial(std::string_view text) {
  auto fields = split_fields(text);
  std::vector<T> coeffs(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) coeffs[fields.size() - 1 - i] = parse_scalar<T>(fields[i]);
  return Polynomial<T>(std::move(coeffs));
}

template <Scalar T>
MonicOriginal<T> parse_monic_original(std::string_view text) {
  return MonicOriginal<T>(parse_polynomial<T>(text));
}

template <Scalar T>
std::string format_polynomial(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!out.empty()) out += ',';
    out += format_scalar(p.coeff(static_cast<std::size_t>(i)));
  }
  return out;
}

template <Scalar T>
std::string format_polynomial(const MonicOriginal<T>& p) {
  return format_polynomial(p.poly());
}

}  // namespace polydecomp
