#include "polydecomp/serialize.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace polydecomp {

namespace {

// Shortest round-trip text for a double, as used in the CSV rows.
std::string number_text(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general);
  return std::string(buf.data(), ptr);
}

}  // namespace

const std::vector<std::string>& estimate_columns() {
  static const std::vector<std::string> columns = {"n",    "d",       "field", "epsilon",   "B",
                                                   "mode", "samples", "seed",  "mean",      "std_error",
                                                   "lower_bound", "upper_bound", "cheng_bound"};
  return columns;
}

nlohmann::ordered_json estimate_json(const TubeSpec& spec, const EstimateResult& result) {
  const DensityBounds bounds = bounds_for(spec);
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  if (spec.d) {
    j["d"] = *spec.d;
  } else {
    j["d"] = "union";
  }
  j["field"] = std::string(to_string(spec.field));
  j["epsilon"] = spec.epsilon;
  j["B"] = spec.B;
  j["mode"] = std::string(to_string(result.mode));
  j["samples"] = result.samples;
  j["seed"] = result.seed;
  j["mean"] = result.mean;
  j["std_error"] = result.std_error;
  j["lower_bound"] = bounds.lower;
  j["upper_bound"] = bounds.upper;
  j["cheng_bound"] = cheng_bound(spec.n, spec.epsilon, spec.B);
  return j;
}

std::string estimate_csv_header() {
  std::string out;
  for (const auto& c : estimate_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string estimate_csv_row(const TubeSpec& spec, const EstimateResult& result) {
  const auto j = estimate_json(spec, result);
  std::ostringstream row;
  bool first = true;
  for (const auto& key : estimate_columns()) {
    if (!first) row << ',';
    first = false;
    const auto& v = j.at(key);
    if (v.is_string()) {
      row << v.get<std::string>();
    } else if (v.is_number_float()) {
      row << number_text(v.get<double>());
    } else {
      row << v.dump();
    }
  }
  return row.str();
}

}  // namespace polydecomp
