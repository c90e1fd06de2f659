#include "polydecomp/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "polydecomp/errors.hpp"

namespace polydecomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("invalid integer literal '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

// Exact value of a decimal literal such as "-12.25" or "3e-2".
Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto pos = s.find_first_of("eE"); pos != std::string_view::npos) {
    mantissa = s.substr(0, pos);
    std::string_view exp_text = s.substr(pos + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty())
      throw ParseError("invalid exponent in '" + std::string(s) + "'");
  }
  std::string digits;
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("invalid numeric literal '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw ParseError("invalid numeric literal '" + std::string(s) + "'");
  Rational value{mpz_class(digits, 10)};
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    value *= scale;
  } else {
    value /= scale;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("invalid real literal '" + std::string(s) + "'");
  return value;
}

std::string shortest(double x) {
  if (x == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string_view to_string(Field field) {
  switch (field) {
    case Field::rational:
      return "rational";
    case Field::real64:
      return "real64";
    case Field::complex64:
      return "complex64";
  }
  return "?";
}

Field parse_field(std::string_view text) {
  if (text == "rational") return Field::rational;
  if (text == "real64" || text == "real") return Field::real64;
  if (text == "complex64" || text == "complex") return Field::complex64;
  throw ParseError("unknown field '" + std::string(text) + "' (expected rational, real64 or complex64)");
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)));
    mpz_class den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (is_integer_literal(s)) return Rational(parse_integer(s));
  return parse_decimal(s);
}

template <>
Real parse_scalar<Real>(std::string_view text) {
  return parse_double(text);
}

template <>
Complex parse_scalar<Complex>(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_double(body.substr(0, split)), imag_of(body.substr(split))};
}

std::string format_scalar(const Rational& x) { return x.get_str(10); }

std::string format_scalar(Real x) { return shortest(x); }

std::string format_scalar(const Complex& x) {
  std::string im = shortest(x.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return shortest(x.real()) + im + "i";
}

}  // namespace polydecomp
