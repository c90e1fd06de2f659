#pragma once

// JSON and CSV shapes shared by the CLI and the Python module.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polydecomp/collisions.hpp"
#include "polydecomp/decompose.hpp"
#include "polydecomp/density.hpp"
#include "polydecomp/text_format.hpp"

namespace polydecomp {

/// {d, g, h} with g and h in polynomial text format.
template <Scalar T>
nlohmann::json decomposition_json(int d, const Decomposition<T>& dec) {
  return {{"d", d}, {"g", format_polynomial(dec.g)}, {"h", format_polynomial(dec.h)}};
}

template <Scalar T>
nlohmann::json decompositions_json(const std::vector<std::pair<int, Decomposition<T>>>& list) {
  auto out = nlohmann::json::array();
  for (const auto& [d, dec] : list) out.push_back(decomposition_json(d, dec));
  return out;
}

/// Column order of estimate records, shared by JSON keys and the CSV header.
const std::vector<std::string>& estimate_columns();

/// {n, d|"union", field, epsilon, B, mode, samples, seed, mean, std_error,
///  lower_bound, upper_bound, cheng_bound}
nlohmann::ordered_json estimate_json(const TubeSpec& spec, const EstimateResult& result);

std::string estimate_csv_header();
std::string estimate_csv_row(const TubeSpec& spec, const EstimateResult& result);

namespace detail {

template <Scalar T>
T json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return parse_scalar<T>(v.get<std::string>());
  if (v.is_number_integer()) return T(v.get<long>());
  if (v.is_number()) {
    if constexpr (std::same_as<T, Rational>) return parse_scalar<T>(v.dump());
    else return T(v.get<double>());
  }
  throw ParseError("expected a number or a scalar string, got " + v.dump());
}

}  // namespace detail

/// Parses {variant: "exp"|"trig", n, d, u, v, a, w|z}. u and v are
/// polynomial text (default x^gcd(d,e)); w lists w_{s-1}, ..., w_0 as a
/// JSON array or comma-separated text. Throws ParseError / ParameterError.
template <Scalar T>
CollisionParams<T> collision_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("collision parameters must be a JSON object");
  CollisionParams<T> p;
  try {
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "exp") {
      p.variant = CollisionVariant::exponential;
    } else if (variant == "trig") {
      p.variant = CollisionVariant::trigonometric;
    } else {
      throw ParseError("variant must be \"exp\" or \"trig\"");
    }
    p.n = j.at("n").get<int>();
    p.d = j.at("d").get<int>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("collision parameters: ") + ex.what());
  }
  if (p.d <= 0 || p.n <= 0 || p.n % p.d != 0) throw ParameterError("collision: d must divide n");
  const int i = std::gcd(p.d, p.n / p.d);
  auto component = [&](const char* key) {
    if (!j.contains(key)) return MonicOriginal<T>(Polynomial<T>::monomial(static_cast<std::size_t>(i)));
    return parse_monic_original<T>(j.at(key).get<std::string>());
  };
  p.u = component("u");
  p.v = component("v");
  if (j.contains("a")) p.a = detail::json_scalar<T>(j.at("a"));
  if (p.variant == CollisionVariant::exponential) {
    if (!j.contains("w")) throw ParseError("exponential collision needs w");
    const auto& w = j.at("w");
    if (w.is_array()) {
      for (const auto& c : w) p.w.push_back(detail::json_scalar<T>(c));
    } else if (w.is_string()) {
      for (auto field : split_fields(w.get<std::string>())) p.w.push_back(parse_scalar<T>(field));
    } else {
      p.w.push_back(detail::json_scalar<T>(w));
    }
  } else {
    if (!j.contains("z")) throw ParseError("trigonometric collision needs z");
    p.z = detail::json_scalar<T>(j.at("z"));
  }
  validate(p);
  return p;
}

}  // namespace polydecomp
